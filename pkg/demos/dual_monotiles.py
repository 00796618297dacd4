"""Dual tiles of two prime-based types: corner solutions and side lengths."""
from __future__ import annotations

from tessella.geometry import dual_tile
from tessella.aperiodicity import monotile_forcing
from tessella.families import ka, kn_prime


def main() -> None:
    for name, t in (("kn_prime(1)", kn_prime(1)), ("ka(7,11,13)", ka(7, 11, 13))):
        d = dual_tile(t)
        r = monotile_forcing(t)
        print(f"{name} = {t}")
        print(f"  side length {d.side_length:.6f}, dual area {d.area:.6f}")
        print(f"  {len(r.solutions)} corner solutions, {sum(m.eliminated for m in r.mixed)}/{len(r.mixed)} mixed eliminated, "
              f"smallest gap between side lengths {r.min_side_gap:.3g}")
        print(f"  verdict: {r.verdict}")


if __name__ == "__main__":
    main()
