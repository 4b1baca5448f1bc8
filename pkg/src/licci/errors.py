"""Exception hierarchy shared by every module.

Each error carries a short machine-readable ``code`` so the CLI can emit
structured JSON without string matching.
"""


class LicciError(Exception):
    code = "error"

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self)}


class NegativePart(LicciError, ValueError):
    code = "negative_part"


class SumIdentityViolated(LicciError, ValueError):
    code = "sum_identity_violated"


class CodimMismatch(LicciError, ValueError):
    code = "codim_mismatch"


class InvalidChoice(LicciError, ValueError):
    code = "invalid_choice"


class NegativePartProduced(LicciError, ValueError):
    code = "negative_part_produced"


class TooFewParts(LicciError, ValueError):
    code = "too_few_parts"


class NotApplicable(LicciError, ValueError):
    code = "not_applicable"


class WrongCodim(LicciError, ValueError):
    code = "wrong_codim"


class UnknownVertex(LicciError, KeyError):
    code = "unknown_vertex"


class NotCosetDominant(LicciError, ValueError):
    code = "not_coset_dominant"


class ArmTooShort(LicciError, RuntimeError):
    code = "arm_too_short"


class BudgetExceeded(LicciError, RuntimeError):
    code = "budget_exceeded"


class BudgetOverflow(LicciError, RuntimeError):
    code = "budget_overflow"

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class NeedsKCap(LicciError, ValueError):
    code = "needs_k_cap"


class UnknownFamily(LicciError, KeyError):
    code = "unknown_family"


class BadParams(LicciError, ValueError):
    code = "bad_params"
