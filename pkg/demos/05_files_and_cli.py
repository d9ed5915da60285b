"""
Structure files and the command line
=====================================

Every structure has a canonical text form: emit it, version it, validate it
later.  The command line drives the same validators; it is scripted here
in-process through run_command, which returns the exit code a shell would see.
"""

import tempfile
from pathlib import Path

from groupoids import (
    Morphism,
    cyclic_group,
    emit_structure_file,
    group_pair_groupoid,
    parse_structure_file,
)
from groupoids.cli import run_command

gg = group_pair_groupoid(cyclic_group(2))
text = emit_structure_file(gg)
print("the pair structure on Z2 as a file:\n")
print(text)

# emit and parse are exact inverses
assert parse_structure_file(text).structure == gg
print("parse(emit(structure)) == structure: True")

workdir = Path(tempfile.mkdtemp(prefix="groupoids-demo-"))
path = workdir / "pairZ2.gpd"
path.write_text(text, encoding="utf-8")

print("\n$ groupoids validate pairZ2.gpd")
code = run_command(["validate", str(path)])
print("exit code:", code)

print("\n$ groupoids check pairZ2.gpd --mode both")
code = run_command(["check", str(path)])
print("exit code:", code)

# a morphism file names its endpoints; paths resolve relative to the file
g = gg.base
m = Morphism(g, g, {x: x for x in g.arrows}, {u: u for u in g.objects})
(workdir / "identity.gpd").write_text(
    emit_structure_file(m, from_path="pairZ2.gpd", to_path="pairZ2.gpd"),
    encoding="utf-8",
)
print("\n$ groupoids morphism identity.gpd")
code = run_command(["morphism", str(workdir / "identity.gpd")])
print("exit code:", code)

# a deliberate mistake: an undeclared token makes the parser name the line
bad = text.replace("object_group_inv: 0=0 1=1", "object_group_inv: 0=0 1=9")
(workdir / "bad.gpd").write_text(bad, encoding="utf-8")
print("\n$ groupoids validate bad.gpd")
code = run_command(["validate", str(workdir / "bad.gpd")])
print("exit code:", code)
