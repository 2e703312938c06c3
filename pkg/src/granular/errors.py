"""Error type and enumeration-cap configuration shared by all modules."""

import os


class GranularError(ValueError):
    """Raised for invalid inputs and exceeded enumeration caps.

    ``code`` is a short machine-readable slug used by the CLI error object;
    the message carries the human-readable detail.
    """

    def __init__(self, code: str, detail: str):
        super().__init__(detail)
        self.code = code
        self.detail = detail


CAP_ENV = "GRANULAR_CAP"


def resolve_cap(explicit: int | None, default: int) -> int:
    """Pick the enumeration cap: explicit argument, then $GRANULAR_CAP, then default."""
    if explicit is not None:
        return explicit
    raw = os.environ.get(CAP_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise GranularError("invalid_cap", f"{CAP_ENV} must be an integer, got {raw!r}")
    return default
