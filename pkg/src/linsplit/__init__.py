"""Linearized polynomials over finite fields: nullity, split trinomials, QSP cost."""
