from enum import Enum


class ProbeVariant(str, Enum):
    STRICHARTZ = "strichartz"
    PROP1 = "prop1"
    PROP2 = "prop2"
    LEMMA = "lemma"

    @property
    def cone_power(self) -> float:
        """Power alpha of the cone weight in the bilinear variants."""
        return {ProbeVariant.PROP1: 0.5, ProbeVariant.PROP2: 1.0}[self]


class SamplerKind(str, Enum):
    FREE = "free"            # windowed free Schrodinger waves
    MODULATED = "modulated"  # extra random temporal frequency per mode
