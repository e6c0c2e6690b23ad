import os

from .errors import ResourceLimitError

DEFAULT_NODE_CAP = 10**6
ENV_VAR = "CASTELLA_NODE_CAP"


def node_cap() -> int:
    """Current enumeration cap, read from the environment on every call."""
    raw = os.environ.get(ENV_VAR)
    if raw is None or not raw.strip():
        return DEFAULT_NODE_CAP
    return int(raw)


def check_size(size: int, what: str) -> None:
    cap = node_cap()
    if size > cap:
        raise ResourceLimitError(f"{what} exceeded node cap {cap}")
