"""Walk through the three-logician bar puzzle world by world."""

from hatpuzzles.cli import render_joke
from hatpuzzles.core import DontKnow, Know, LimitedSupply, Palette
from hatpuzzles.epistemic import announce, deduce, initial_worlds, simulate

spec = LimitedSupply(3, (3, 2))
palette = Palette(2)


def show(ws):
    return " ".join(palette.format_assignment(w).replace(",", "") for w in ws)


if __name__ == "__main__":
    ws = initial_worlds(spec)
    print(f"start        {len(ws)} worlds: {show(ws)}")
    for pos in (0, 1):
        ws = announce(spec, ws, pos, DontKnow())
        print(f"L{pos + 1} idk       {len(ws)} worlds: {show(ws)}")
    colors = deduce(spec, [DontKnow(), DontKnow(), Know(0)], None, 2)
    print("third hat:", ", ".join(palette.display(c) for c in sorted(colors)))
    print()
    for world in initial_worlds(spec):
        said = ["know" if isinstance(e.announcement, Know) else "idk" for e in simulate(spec, world)]
        print(palette.format_assignment(world), said)
    print()
    print(render_joke(simulate(spec, (0, 0, 0)), palette), end="")
