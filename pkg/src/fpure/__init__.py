"""Exact characteristic-p computer algebra for Frobenius splittings.

Subpackages by concern:

- ``ring`` / ``poly`` / ``parser``: F_p polynomial arithmetic, monomial
  orders, the text grammar.
- ``groebner``: Buchberger engine and derived ideal operations.
- ``monomial``: combinatorial monomial-ideal fast paths, valuations,
  Newton polyhedra.
- ``determinantal``: the four matrix families, witness polynomials,
  structural symbolic-power formulas, binomial edge ideals.
- ``fsing``: Fedder-type criteria and all F-purity verdicts.
- ``blowup``: Rees presentations, degree bounds, Waldschmidt estimates.
- ``homology``: Betti tables, depth, regularity.
- ``cli``: the command-line front end.
"""

__version__ = "0.1.0"
