"""
Hunting the least window that forces a monochromatic pattern
============================================================

Runs the backtracking avoidance search window by window, cross-checks it
against a CNF encoding solved by DPLL, and reports the threshold where
every 2-coloring contains a one-color {xy, x+y}.
"""

from monochrome import (
    WindowParams,
    avoidance_backtrack,
    build_instance,
    cnf_export,
    dual_engine_check,
    enumerate_window,
    format_element,
    moreira_number,
    parse_family,
    parse_ring_spec,
    to_dimacs,
)

Z = parse_ring_spec("Z")
family = parse_family(Z, "t")

# at N = 4 the constraints are still satisfiable
window = enumerate_window(Z, WindowParams(4))
inst = build_instance(window, 2, family)
print("pattern candidates in {1..4}:",
      [[format_element(e) for e in c.elements] for c in inst.candidates])

res = avoidance_backtrack(inst)
print(f"N=4: {res.status.value}, avoiding colors {list(res.coloring.colors)}, "
      f"{res.nodes} nodes visited")

# the same instance as DIMACS CNF: one boolean per (element, color)
text = to_dimacs(cnf_export(inst))
header = next(line for line in text.splitlines() if line.startswith("p "))
print("CNF size:", header)

# both engines agree at every window size on the way up
for n in range(1, 9):
    check = dual_engine_check(build_instance(
        enumerate_window(Z, WindowParams(n)), 2, family))
    print(f"N={n}: backtrack={check['backtrack']:>16} "
          f"cnf_sat={check['cnf_sat']} agree={check['agree']}")

# the search wrapped up as a single threshold query
res = moreira_number(2, family, 32)
print(f"least N forcing a one-color pattern with 2 colors: {res.n}")

# adding the identity polynomial f in {0, t} pushes the threshold up
triple = parse_family(Z, "0;t")
print(f"same question for {{xy, x, x+y}}: {moreira_number(2, triple, 32).n}")
