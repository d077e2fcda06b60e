"""Colored invariants of the trefoil for every color of total size <= 2.

Run:  python demos/trefoil_colors.py
"""

from skeinlab import BraidWord, ColoredLink, reduced_P_knot
from skeinlab.verify import colors_up_to

TREFOIL = BraidWord(2, (1, 1, 1))


def main():
    for lam, mu in colors_up_to(2, nonempty=True):
        rep = reduced_P_knot(ColoredLink(TREFOIL, [(lam, mu)]))
        print(f"{str(lam):>8} / {str(mu):<6} even={rep.even}")
        print(f"    {rep.value}")


if __name__ == "__main__":
    main()
