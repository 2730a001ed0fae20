"""
Re-deriving the closed formula symbolically
===========================================

Each of the 13 contributing alcoves contributes a signed, pulled-back copy
of the 14-piece multiplicity table.  Adding them up with exact cone
arithmetic leaves a piecewise-linear function of (a, b, c, d, e, f, l),
which is then compared with the closed formula piece by piece.
This takes a few seconds to a minute.
"""

import logging

from a2fusion.symbolic import bmw_symbolic, certificate, compare_piecewise, symbolic_kac_walton

logging.basicConfig(level=logging.INFO, format="%(message)s")

kw = symbolic_kac_walton()
for step in kw.provenance:
    print(f"{step['word']:>7} {step['sign']:+d}  x = {step['substitution']['x']}")

print(kw.nonzero_count, "nonzero pieces,", kw.zero_count, "zero pieces")

bmw = bmw_symbolic()
report = compare_piecewise(kw.pieces, bmw)
print(report.summary())

# The first two matched pieces of the certificate.
print("\n".join(certificate(kw.pieces, bmw, report).split("\n\n")[:3]))

# Spot values: the worked example, and the vacuum at level 0.
print(kw.evaluate((4, 2, 3, 1, 2, 4, 7)), kw.evaluate((0, 0, 0, 0, 0, 0, 0)))
