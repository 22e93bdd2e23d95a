"""Morphisms of comodule algebras, module coalgebras and Doi-Koppinen data, both flavors.

A morphism of data is a pair: an algebra map on the comodule-algebra side and a
coalgebra (coring) map on the module-coalgebra side, each structure preserving.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..exactlin import Matrix
from ..findim import check_algebra_map
from ..report import Report
from .structures import (ComoduleAlgebraB, ComoduleAlgebraW, ModuleCoalgebraB,
                         ModuleCoalgebraW)


def _shape(rep: Report, f: Matrix, rows: int, cols: int, prefix: str = "") -> bool:
    return rep.law(prefix + "shape").expect(f.shape, (rows, cols))


def check_ca_morphism_w(f: Matrix, x: ComoduleAlgebraW, y: ComoduleAlgebraW,
                        report: Report | None = None, prefix: str = "") -> Report:
    """Algebra map with ``(H⊗f)∘ρ_X = ρ_Y∘f``."""
    rep = report if report is not None else Report("comodule algebra map %s → %s"
                                                   % (x.name, y.name))
    if not _shape(rep, f, y.algebra.dim, x.algebra.dim, prefix):
        return rep
    check_algebra_map(x.algebra, y.algebra, f, report=rep, name=prefix + "algebra_map")
    ident = Matrix.identity(x.weak_hopf.dim, f.field)
    rep.law(prefix + "colinear").expect(ident.kron(f) @ x.coaction, y.coaction @ f)
    return rep


def check_ca_morphism_b(f: Matrix, x: ComoduleAlgebraB, y: ComoduleAlgebraB,
                        report: Report | None = None, prefix: str = "") -> Report:
    """Map of R-rings (``f∘s_X = s_Y``) with ``(H⊗_R f)∘ρ_X = ρ_Y∘f``."""
    rep = report if report is not None else Report("comodule algebra map %s → %s"
                                                   % (x.name, y.name))
    if not _shape(rep, f, y.algebra.dim, x.algebra.dim, prefix):
        return rep
    check_algebra_map(x.algebra, y.algebra, f, report=rep, name=prefix + "algebra_map")
    rep.law(prefix + "preserves_source").expect(f @ x.source, y.source)
    ident = Matrix.identity(x.bialgebroid.dim, f.field)
    hf = x.tensor.induced(ident, f, y.tensor)
    rep.law(prefix + "colinear").expect(hf @ x.coaction, y.coaction @ f)
    return rep


def check_mc_morphism_w(f: Matrix, x: ModuleCoalgebraW, y: ModuleCoalgebraW,
                        report: Report | None = None, prefix: str = "") -> Report:
    """``H``-linear coalgebra map."""
    rep = report if report is not None else Report("module coalgebra map %s → %s"
                                                   % (x.name, y.name))
    if not _shape(rep, f, y.coalgebra.dim, x.coalgebra.dim, prefix):
        return rep
    lin = rep.law(prefix + "H_linear")
    for i, (a, b) in enumerate(zip(x.action, y.action)):
        lin.expect(f @ a, b @ f, i)
    rep.law(prefix + "comultiplicative").expect(f.kron(f) @ x.coalgebra.comult,
                                                y.coalgebra.comult @ f)
    counit = Matrix([list(y.coalgebra.counit)], f.field) @ f
    rep.law(prefix + "counital").expect(counit.row(0), x.coalgebra.counit)
    return rep


def check_mc_morphism_b(f: Matrix, x: ModuleCoalgebraB, y: ModuleCoalgebraB,
                        report: Report | None = None, prefix: str = "") -> Report:
    """``H``-linear coring map (R-bilinearity follows from ``H``-linearity; checked anyway)."""
    rep = report if report is not None else Report("module coalgebra map %s → %s"
                                                   % (x.name, y.name))
    X, Y = x.coring, y.coring
    if not _shape(rep, f, Y.dim, X.dim, prefix):
        return rep
    lin = rep.law(prefix + "H_linear")
    for i, (a, b) in enumerate(zip(x.action, y.action)):
        lin.expect(f @ a, b @ f, i)
    bim = rep.law(prefix + "R_bilinear")
    for k in range(X.base.dim):
        bim.expect(f @ X.bimodule.left[k], Y.bimodule.left[k] @ f, k, note="left")
        bim.expect(f @ X.bimodule.right[k], Y.bimodule.right[k] @ f, k, note="right")
    ff = X.tensor.induced(f, f, Y.tensor)
    rep.law(prefix + "comultiplicative").expect(ff @ X.comult, Y.comult @ f)
    rep.law(prefix + "counital").expect(Y.counit @ f, X.counit)
    return rep


@dataclass
class DatumMorphism:
    """A pair ``(f_A, f_C)``."""

    algebra_map: Matrix
    coalgebra_map: Matrix


def check_datum_morphism(m: DatumMorphism, source, target) -> Report:
    """Both components of a morphism of Doi-Koppinen data, in whichever flavor they are."""
    rep = Report("datum map %s → %s" % (source.name, target.name))
    if isinstance(source.A, ComoduleAlgebraW):
        check_ca_morphism_w(m.algebra_map, source.A, target.A, rep, "A_")
        check_mc_morphism_w(m.coalgebra_map, source.C, target.C, rep, "C_")
    else:
        check_ca_morphism_b(m.algebra_map, source.A, target.A, rep, "A_")
        check_mc_morphism_b(m.coalgebra_map, source.C, target.C, rep, "C_")
    return rep


__all__ = ["check_ca_morphism_w", "check_ca_morphism_b", "check_mc_morphism_w",
           "check_mc_morphism_b", "DatumMorphism", "check_datum_morphism"]
