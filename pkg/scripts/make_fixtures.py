"""Regenerate the bundled character files in src/steinquot/data.

Each file is chi((p-1)rho) times a known Steinberg quotient, written in
Weyl-factor form.  This is a consistency harness: the files reproduce the
quotients they were built from and are not independent character data.
"""

from pathlib import Path

from steinquot.charring import multiply
from steinquot.rootdata import build_root_datum
from steinquot.sources import dump_character_file, source_from_character
from steinquot.steinberg import quotient_from_orbits, steinberg_chi

OUT = Path(__file__).resolve().parents[1] / "src" / "steinquot" / "data"

G2_CONVENTIONS = (
    "Bourbaki numbering: alpha_1 short, alpha_2 long, Cartan [[2,-3],[-1,2]]; "
    "(a,b) = a*w1 + b*w2 with w1 the short dominant weight (7-dim module) and "
    "w2 the long one (adjoint). Under the swapped labeling s(0,1)+s(1,0) could "
    "not be a Steinberg quotient of the PIM indexed by (0,1), since (1,0) would "
    "then lie above (0,1)."
)

G2_P2 = {
    # lam: orbit coefficients of q(lam); file named after the PIM Q_1((p-1)rho + w0 lam)
    (0, 0): {(0, 0): 1},
    (1, 0): {(1, 0): 1},
    (0, 1): {(0, 1): 1, (1, 0): 1},
    (1, 1): {(1, 1): 1, (0, 1): 2, (1, 0): 2},
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    g2 = build_root_datum("G2")
    for lam, coeffs in G2_P2.items():
        sq = quotient_from_orbits(g2, 2, lam, coeffs, "pim")
        ch = multiply(sq.quotient, steinberg_chi(g2, 2))
        pim = tuple(1 - x for x in lam)  # (p-1)rho + w0 lam, w0 = -1 for G2
        terms = " + ".join(
            (f"{c} " if c > 1 else "") + f"s({mu[0]},{mu[1]})" for mu, c in coeffs.items()
        )
        src = source_from_character(
            g2, 2, ch, "pim",
            provenance=(
                f"ch Q_1({pim[0]},{pim[1]}) for G2, p=2, assembled as chi(rho) * q({lam[0]},{lam[1]}) "
                f"with q({lam[0]},{lam[1]}) = {terms}. Consistency harness, not independent data."
            ),
            conventions=G2_CONVENTIONS,
        )
        dump_character_file(src, OUT / f"g2_p2_pim_{pim[0]}{pim[1]}.json")

    a2 = build_root_datum("A2")
    for p, lam in [(3, (2, 2)), (3, (1, 2)), (5, (4, 3))]:
        a, b = lam
        coeffs = {lam: 1}
        if a + b > p:
            coeffs[(p - b, p - a)] = 1
        sq = quotient_from_orbits(a2, p, lam, coeffs, "tilting")
        ch = multiply(sq.quotient, steinberg_chi(a2, p))
        top = tuple(x + p - 1 for x in lam)
        src = source_from_character(
            a2, p, ch, "tilting",
            provenance=(
                f"ch T({top[0]},{top[1]}) for SL3, p={p}, assembled as chi((p-1)rho) * t{lam} "
                "with t(a,b) = s(a,b) + s(p-b,p-a) when a+b > p, else s(a,b). "
                "Consistency harness, not independent data."
            ),
            conventions="Bourbaki numbering, Cartan [[2,-1],[-1,2]]; (a,b) = a*w1 + b*w2.",
        )
        dump_character_file(src, OUT / f"a2_p{p}_tilting_{top[0]}{top[1]}.json")


if __name__ == "__main__":
    main()
