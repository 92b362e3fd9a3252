import string

from affinesim.signature import ExactScalar


class AffSimFormatter(string.Formatter):
    """
    Formats command output, e.g. formatter.format_output("{amp:ring}", {"amp": scalar}).
    Exact scalars are always printed in ring form followed by a 10 decimal approximation.
    """

    decimals = 10

    def __init__(self):
        self.transformations = {
            "ring": self.ring,
            "approx": self.approx,
            "prob": self.prob,
            "r": str,
        }

        self.default_transformation = "r"

    def format_output(self, template: str, params=None):
        if params:
            return self.vformat(template, [], params)

        return template

    def convert_field(self, value, conversion):
        if conversion is not None:
            raise ValueError("Conversions are disabled for AffSimFormatter")

        return value

    def format_field(self, value, format_spec):
        if not format_spec:
            format_spec = self.default_transformation

        if format_spec not in self.transformations:
            raise ValueError(f"Unknown format transformation [{format_spec}]")

        return self.transformations[format_spec](value)

    @classmethod
    def _number(cls, x: float) -> str:
        # rounding first avoids printing -0.0000000000
        return f"{round(x, cls.decimals) + 0.0:.{cls.decimals}f}"

    @classmethod
    def approx(cls, value: ExactScalar) -> str:
        z = value.to_complex()

        if value.is_real():
            return cls._number(z.real)

        imag = round(z.imag, cls.decimals) + 0.0
        sign = "-" if imag < 0 else "+"

        return f"{cls._number(z.real)}{sign}{cls._number(abs(imag))}i"

    @classmethod
    def ring(cls, value: ExactScalar) -> str:
        if value.is_zero:
            return "0"

        return f"2^({value.p}/2) * w^{value.q}  (≈ {cls.approx(value)})"

    @classmethod
    def prob(cls, value: ExactScalar) -> str:
        if value.is_zero:
            return "0"

        s = value.dyadic_exponent()

        if s is None:
            raise ValueError(f"Value [{value!r}] is not a power of 1/2")

        return f"2^(-{s})  (≈ {cls.approx(value)})"
