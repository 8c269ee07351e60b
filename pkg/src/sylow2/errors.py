"""Exception types shared across the package."""


class ResourceLimitError(ValueError):
    """A request exceeds a configured desk-scale cap."""

    def __init__(self, what, value, cap):
        self.what = what
        self.value = value
        self.cap = cap
        super().__init__(f"{what}={value} exceeds cap {cap} (pass --unsafe-cap to lift it)")


class TreeParseError(ValueError):
    """Malformed tree text; ``offset`` is the byte position of the problem."""

    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")


class NonCanonicalTreeWarning(UserWarning):
    """Tree text parsed fine but was not in canonical form."""


class BranchingError(RuntimeError):
    """A restriction produced a repeated constituent."""


def check_cap(what, value, cap):
    if cap is not None and value > cap:
        raise ResourceLimitError(what, value, cap)
