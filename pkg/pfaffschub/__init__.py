# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""Gröbner geometry of skew-symmetric matrix Schubert varieties"""

# Used when the package runs from a source checkout without metadata
__version__ = "0.1"
