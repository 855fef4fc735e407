#!/usr/bin/env python3

# SPDX-License-Identifier: Apache-2.0
# Copyright 2021 EPAM Systems
"""
Console entry point for pfaffschub
"""

from pfaffschub.main import pfaffschub_entry


def main():
    """Console entry point"""
    pfaffschub_entry()


if __name__ == "__main__":
    main()
