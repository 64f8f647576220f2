#!/usr/bin/env python3
"""Run the acceptance suite (the exhaustive shipping criteria) on its own."""

import sys

import pytest

if __name__ == "__main__":
    sys.exit(pytest.main(["tests/test_acceptance.py", "-v", *sys.argv[1:]]))
