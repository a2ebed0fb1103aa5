"""Exact certificates for the cyclotomic-integer obstruction."""
