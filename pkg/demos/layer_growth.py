"""Grow a [4,5,4,5] patch layer by layer, save it and draw it."""
from __future__ import annotations

import sys
from pathlib import Path

from tessella import CyclicType, new_fan, validate_patch
from tessella.io import save
from tessella.patch import grow
from tessella.render import render_svg


def main(out_dir: str = ".") -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    p = new_fan(CyclicType([4, 5, 4, 5]))
    for _ in range(3):
        p = grow(p, 1)
        print(f"{p.completed_layers} layers: {p.n_faces} faces")
    assert validate_patch(p) == []
    save(p, out / "four_five.patch.json")
    (out / "four_five.svg").write_text(render_svg(p))
    print(f"wrote {out / 'four_five.patch.json'} and {out / 'four_five.svg'}")


if __name__ == "__main__":
    main(*sys.argv[1:])
