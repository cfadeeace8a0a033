"""Canonical report bytes and the short human summary."""

from __future__ import annotations

import json
import logging
from pathlib import Path

from config.settings import settings

logger = logging.getLogger(__name__)


def canonical_json(report: dict) -> str:
    """Sorted keys, fixed indent, trailing newline: identical inputs give identical bytes."""
    return json.dumps(report, sort_keys=True, indent=settings.JSON_INDENT) + "\n"


def write_report(report: dict, path: str) -> None:
    target = Path(path)
    if target.parent and not target.parent.exists():
        target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(canonical_json(report), encoding="utf-8")
    logger.info(f"[cli] Report written to {target}")


def summarize(report: dict) -> str:
    """A few readable lines; the JSON report stays the source of truth."""
    command = report.get("command", "?")
    lines = [f"command: {command}"]
    if "error" in report:
        lines.append(f"error: {report['error']}: {report.get('message', '')}")
        if report.get("deficit") is not None:
            lines.append(f"precision deficit: {report['deficit']}")
        return "\n".join(lines) + "\n"

    if "pass" in report:
        lines.append(f"pass: {report['pass']}")
    if "witness" in report:
        lines.append(f"witness: {json.dumps(report['witness'], sort_keys=True)}")
    if command == "logmatrix":
        m = report["matrix"]
        lines.append(f"M_{m['level']} ({m['side']}): g={m['g']} D={m['D']} denominator p^{m['denominator_exp']}")
    elif command == "convergence":
        for step in report["steps"]:
            value = step["agreement_valuation"]
            note = " (precision floor)" if step.get("saturated") else ""
            if value is None:
                note = f" (deficit {step.get('deficit')})"
            lines.append(f"  n={step['n']}: agreement {value}{note}")
    elif command == "weierstrass":
        w = report["result"]
        lines.append(f"mu={w['mu']} lambda={w['lambda']} certified={w['certified']} precision={w['precision']}")
    elif command == "compare":
        lines.append(f"mu={report['mu']} lambda={report['lambda']} compared mod p^{report['precision']}")
    elif command == "euler":
        ledger = report["ledger"]
        lines.append(f"global={ledger['global_exp']} local={ledger['local_exp']} condition={ledger['condition_exp']} g_+={ledger['g_plus']}")
    elif command == "fixtures":
        for item in report["fixtures"]:
            lines.append(f"  {item['name']} ({item['kind']}, p={item['p']}): {item['description']}")
    return "\n".join(lines) + "\n"
