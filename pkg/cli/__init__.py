from cli.job import JobConfig
from cli.reports import canonical_json, summarize
from cli.runner import RunResult, run

__all__ = ["JobConfig", "RunResult", "canonical_json", "run", "summarize"]
