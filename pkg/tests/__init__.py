"""Tests suite for `skentangle`."""
