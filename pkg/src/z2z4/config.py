"""Run-time limits shared by the enumeration and search routines."""

from dataclasses import dataclass


@dataclass
class Settings:
    guard_log2: int = 24
    orbit_ceiling_log2: int = 25
    workers: int = 1


settings = Settings()


class GuardExceeded(RuntimeError):
    """Raised when an operation would enumerate more elements than allowed."""


def load_config(path):
    """Read a ``key=value`` config file into a dict of ints.

    Blank lines and ``#`` comments are ignored. Recognised keys are the
    field names of :class:`Settings`.
    """
    values = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, val = (s.strip() for s in line.split("=", 1))
            if key not in Settings.__dataclass_fields__:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = int(val)
    return values


def apply_config(values):
    for key, val in values.items():
        setattr(settings, key, val)
