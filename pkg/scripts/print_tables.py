"""Print the first terms of U^(k), V^(k) for the preset families, next to
the values of the printed symbolic tables, and flag any disagreement."""

import argparse

from genfib.genfam import u_family, v_family
from genfib.horadam import PRESETS

PRINTED = {
    ("U", 1): lambda p, q: [0, 1, p, p**2 - q],
    ("V", 1): lambda p, q: [2, p, p**2 - 2 * q, p**3 - 3 * p * q],
    ("U", 2): lambda p, q: [0, 0, 1, p],
    ("V", 2): lambda p, q: [4, 2 * p, p**2, p**3 - 2 * p * q],
    ("U", 3): lambda p, q: [0, 0, 0, 1],
    ("V", 3): lambda p, q: [8, 4 * p, 2 * p**2, 8],
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--terms", type=int, default=8)
    args = parser.parse_args()

    for name, params in PRESETS.items():
        print(f"== {name} (p={params.p}, q={params.q})")
        for (which, k), printed in PRINTED.items():
            family = u_family if which == "U" else v_family
            got = [family(params, n, k) for n in range(args.terms)]
            ref = printed(params.p, params.q)
            flags = ["" if g == r else f"  <- printed {r} at n={n}"
                     for n, (g, r) in enumerate(zip(got, ref))]
            print(f"  {which}^({k}): {got}{''.join(flags)}")


if __name__ == "__main__":
    main()
