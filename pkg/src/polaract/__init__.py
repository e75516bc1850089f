"""Polarity of isometric actions on compact symmetric spaces, checked numerically."""
