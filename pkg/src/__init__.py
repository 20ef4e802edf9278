"""Closed-form spectra and maximum-nullity bounds of Cayley graphs."""
