# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""Exception hierarchy shared by all pfaffschub modules"""


class PfaffschubError(Exception):
    "Base class for all errors reported by pfaffschub"

    exit_code = 1


class UsageError(PfaffschubError):
    "Malformed input or violated precondition"

    exit_code = 2


class PermutationError(UsageError):
    "Invalid permutation, involution or window"


class RankTableError(UsageError):
    "Rank table that violates a realizability condition"

    def __init__(self, message: str, condition: str = "", cell=None):
        super().__init__(message)
        self.condition = condition
        self.cell = cell


class PolynomialError(UsageError):
    "Malformed polynomial text or mixed variable spaces"


class BudgetError(PfaffschubError):
    "A configured resource budget was exceeded"

    exit_code = 3

    def __init__(self, resource: str, limit: int):
        super().__init__(f"Budget for {resource} exceeded (limit {limit})")
        self.resource = resource
        self.limit = limit


class VerificationError(PfaffschubError):
    "A verification suite found a failing instance"

    exit_code = 1


class ConfigError(UsageError):
    "Error in a YAML configuration file"

    def __init__(self, message: str, mark=None):
        super().__init__(message)
        self.message = message
        self.mark = mark

    def __str__(self):
        if self.mark is None:
            return self.message
        return f"{self.message} {self.mark}"
