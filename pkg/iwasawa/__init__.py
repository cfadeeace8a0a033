from iwasawa.comparator import ComparisonReport, functional_equation_compare
from iwasawa.element import IwasawaElement, idempotent, sigma_minus_one
from iwasawa.euler import ControlLedger, control_ledger, euler_characteristic_exponent
from iwasawa.involution import dual_twist, involution_iota, iota_substitution
from iwasawa.presentation import ModulePresentation, char_poly
from iwasawa.weierstrass import WeierstrassData, weierstrass

__all__ = [
    "ComparisonReport",
    "ControlLedger",
    "IwasawaElement",
    "ModulePresentation",
    "WeierstrassData",
    "char_poly",
    "control_ledger",
    "dual_twist",
    "euler_characteristic_exponent",
    "functional_equation_compare",
    "idempotent",
    "involution_iota",
    "iota_substitution",
    "sigma_minus_one",
    "weierstrass",
]
