from enum import Enum


class InitialConditionFamily(str, Enum):
    GAUSSIAN_PACKET = "gaussian_packet"
    SINGLE_MODE = "single_mode"
    MULTI_MODE_RANDOM = "multi_mode_random"


class WaveDataFamily(str, Enum):
    ZERO = "zero"
    GAUSSIAN = "gaussian"   # a a Gaussian bump, b the x-derivative of one
