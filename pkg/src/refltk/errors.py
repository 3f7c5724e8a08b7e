"""Exception hierarchy. Every error carries a short stable ``code`` used by the CLI."""


class ReflError(Exception):
    code = "error"


class InvalidForm(ReflError):
    code = "invalid-form"


class DimensionError(ReflError):
    code = "dimension"


class FieldMismatch(ReflError):
    code = "field-mismatch"


class IsotropicVector(ReflError):
    code = "isotropic-vector"


class OrderCapExceeded(ReflError):
    code = "order-cap-exceeded"


class NotASubset(ReflError):
    code = "not-a-subset"


class UnknownType(ReflError):
    code = "unknown-type"


class NotARoot(ReflError):
    code = "not-a-root"


class InsufficientExpansion(ReflError):
    code = "insufficient-expansion"


class SpecParseError(ReflError):
    code = "parse-error"

    def __init__(self, message, field=None, line=None):
        self.reason = message
        where = []
        if field is not None:
            where.append(f"field {field}")
        if line is not None:
            where.append(f"line {line}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.field = field
        self.line = line


class SingularGram(SpecParseError):
    code = "singular-gram"


class IsotropicGenerator(SpecParseError):
    code = "isotropic-generator"
