"""
Configuration management for zdg-spectra

Centralizes all configuration settings and constants.
"""

import os
from fractions import Fraction
from typing import List, Tuple


class Config:
    """Application configuration settings"""

    # Enumeration and construction budgets
    ENUMERATION_BUDGET: int = int(os.getenv('ZDG_ENUMERATION_BUDGET', 10 ** 6))
    DENSE_BUDGET: int = int(os.getenv('ZDG_DENSE_BUDGET', 4000))
    ORACLE_BUDGET: int = int(os.getenv('ZDG_ORACLE_BUDGET', 3000))

    # Brute-force structural budgets (vertex counts)
    CLIQUE_BRUTE_FORCE_BUDGET: int = int(os.getenv('ZDG_CLIQUE_BUDGET', 200))
    INDEPENDENCE_BRUTE_FORCE_BUDGET: int = int(os.getenv('ZDG_INDEPENDENCE_BUDGET', 60))

    # Numeric settings
    DEFAULT_TOLERANCE: float = float(os.getenv('ZDG_TOLERANCE', 1e-8))
    CLUSTER_GAP: float = float(os.getenv('ZDG_CLUSTER_GAP', 1e-6))
    OUTPUT_DIGITS: int = int(os.getenv('ZDG_OUTPUT_DIGITS', 12))

    # Rows per block when forming ring products in bulk
    PRODUCT_CHUNK_ROWS: int = int(os.getenv('ZDG_PRODUCT_CHUNK_ROWS', 512))

    # Cache settings
    MAX_CACHE_SIZE: int = int(os.getenv('MAX_CACHE_SIZE', 16))

    # Verification fan-out
    VERIFY_WORKERS: int = int(os.getenv('ZDG_VERIFY_WORKERS', 4))

    # Logging settings
    LOG_LEVEL: str = os.getenv('LOG_LEVEL', 'WARNING')

    @classmethod
    def validate(cls) -> bool:
        """
        Validate configuration settings

        Returns:
            bool: True if configuration is valid

        Raises:
            ValueError: If configuration is invalid
        """
        errors: List[str] = []

        if cls.ENUMERATION_BUDGET <= 0:
            errors.append("ZDG_ENUMERATION_BUDGET must be positive")

        if cls.DENSE_BUDGET <= 0:
            errors.append("ZDG_DENSE_BUDGET must be positive")

        if cls.ORACLE_BUDGET <= 0:
            errors.append("ZDG_ORACLE_BUDGET must be positive")

        if cls.CLIQUE_BRUTE_FORCE_BUDGET < 0 or cls.INDEPENDENCE_BRUTE_FORCE_BUDGET < 0:
            errors.append("Brute-force budgets must be non-negative")

        if cls.DEFAULT_TOLERANCE <= 0:
            errors.append("ZDG_TOLERANCE must be positive")

        if cls.CLUSTER_GAP <= 0:
            errors.append("ZDG_CLUSTER_GAP must be positive")

        if cls.OUTPUT_DIGITS < 6:
            errors.append("ZDG_OUTPUT_DIGITS must be at least 6")

        if cls.PRODUCT_CHUNK_ROWS <= 0:
            errors.append("ZDG_PRODUCT_CHUNK_ROWS must be positive")

        if cls.MAX_CACHE_SIZE <= 0:
            errors.append("MAX_CACHE_SIZE must be positive")

        if cls.VERIFY_WORKERS <= 0:
            errors.append("ZDG_VERIFY_WORKERS must be positive")

        if cls.LOG_LEVEL.upper() not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            errors.append(f"Unknown LOG_LEVEL {cls.LOG_LEVEL}")

        if errors:
            raise ValueError("Configuration errors: " + "; ".join(errors))

        return True


# α values at which the A_α family is sampled during verification
SAMPLE_ALPHAS: Tuple[Fraction, ...] = (
    Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)
)

# Parameter grid of the ring-versus-rule oracle sweep
ORACLE_PRIMES: Tuple[int, ...] = (2, 3, 5)
ORACLE_EXPONENTS: Tuple[int, ...] = (2, 3, 4, 5, 6)
