"""
Felklasser för lösningsgradslabbet

Alla fel som modulerna kastar ärver från AlgebraError, som i sin tur är ett
ValueError. Anropare som bara vill fånga "felaktig indata" kan alltså fånga
ValueError, medan CLI:t fångar AlgebraError och översätter till exitkod 2.

Tekniska detaljer:
- ParseError bär med sig radnumret (1-baserat) i indatafilen
- Att ett gradtak nås i sd_mac/sd_mut är ett resultat, inte ett fel
"""


class AlgebraError(ValueError):
    """Basklass för alla fel i paketet."""


class FieldError(AlgebraError):
    """Ogiltig modul (ej udda primtal, för stor) eller invers av noll."""


class RingMismatchError(AlgebraError):
    """Polynom från olika ringar blandades."""


class ZeroPolynomialError(AlgebraError):
    """Operationen är odefinierad för nollpolynomet."""


class SingularTransformError(AlgebraError):
    """Matrisen till ett linjärt variabelbyte är inte inverterbar."""


class ParseError(AlgebraError):
    """Fel i textformatet för polynomsystem."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"rad {line}: {message}"
        super().__init__(message)


class SeriesOverflowError(AlgebraError):
    """En seriekoefficient lämnade det tillåtna heltalsintervallet."""


class BoundError(AlgebraError):
    """En gränsformel anropades utanför sina förutsättningar."""


class DegreeError(AlgebraError):
    """Ogiltig grad eller fel sorts system (t.ex. inhomogent där homogent krävs)."""


class SyzygyCapExceeded(AlgebraError):
    """Koszul-matrisen skulle bli större än det konfigurerade taket."""
