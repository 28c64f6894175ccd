from .oracle import oracle_check

__all__ = ["oracle_check"]
