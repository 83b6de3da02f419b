from dataclasses import dataclass


@dataclass(frozen=True)
class Settings:
    """Numerical knobs shared by the classifiers, the group code and the CLI.

    tolerance applies to Pin/Spin predicates (bar(s)s = ±1, metric
    preservation); matrix_tolerance to gamma-matrix identities.
    """

    tolerance: float = 1e-10
    matrix_tolerance: float = 1e-12
    seed: int = 1729
    trials: int = 32
    stable_repeats: int = 5
    max_concrete_n: int = 12
    max_oracle_n: int = 10
    max_symbolic_n: int = 30
    grid_size: int = 16
    series_terms: int = 30

    def __post_init__(self):
        if self.tolerance <= 0 or self.matrix_tolerance <= 0:
            raise ValueError("tolerances must be positive")
        if self.trials < 1 or self.stable_repeats < 1:
            raise ValueError("trials and stable_repeats must be at least 1")
        if self.grid_size < 1:
            raise ValueError("grid_size must be at least 1")
        if self.max_concrete_n < 0 or self.max_symbolic_n < 0:
            raise ValueError("dimension ceilings must be non-negative")


DEFAULT_SETTINGS = Settings()
