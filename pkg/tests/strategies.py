from hypothesis import strategies as st

from facehit import generators

seeds = st.integers(min_value=0, max_value=2**64 - 1)


def theorem_instances(max_n: int = 40):
    return st.builds(generators.random_theorem_instance, st.integers(2, max_n), seeds)


def triangulations(max_n: int = 40):
    return st.builds(generators.stacked_triangulation, st.integers(3, max_n), seeds)
