"""Global options for permdual"""
import os

"""Largest n for which F↓n / F↑n may be enumerated. The environment
variable PERMDUAL_MAX_N overrides this value"""
max_n = 8

"""Default seed for every random generator"""
seed = 0

"""Default number of random inputs per randomized check"""
sample_size = 10000

"""Bounds on random transposition sequences: n in 2..max_random_n,
length in 0..max_random_length"""
max_random_n = 9
max_random_length = 12

"""Default (inclusive) range of n for the verification suites"""
exhaustive_n = (3, 6)

"""Above this n, suites check a random sample of F↓n instead of all of it"""
exhaustive_limit = 6

"""Size of the SVG rendering of a chord diagram, in pixels"""
svg_size = 400

"""Radius of the circled chord labels in the SVG rendering"""
svg_label_radius = 9


def get_max_n():
    """The enumeration cap, after the PERMDUAL_MAX_N override"""
    value = os.environ.get("PERMDUAL_MAX_N")
    if value is None:
        return max_n
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"PERMDUAL_MAX_N should be an integer, not {value!r}")
