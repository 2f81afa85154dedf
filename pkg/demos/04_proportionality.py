"""
Classifying curves by the proportionality inequality
====================================================

Each record gives the intersection numbers of a curve C on a compactified
ball quotient surface.  Equality flags a totally geodesic curve.
"""

import io

from chgkit.propcheck import ingest, report

records = io.StringIO(
    '{"name": "line", "compact": true, "c_dot_c": "-1", "kx_dot_c": "3"}\n'
    '{"name": "fibre", "compact": true, "c_dot_c": "0", "kx_dot_c": "3"}\n'
    '{"name": "bad", "compact": true, "c_dot_c": "-2", "kx_dot_c": "3"}\n'
    '{"name": "cusp", "c_dot_c": "-1/2", "kx_dot_c": "2", "d_dot_c": "1", "deg_d_cap_c": "1/2"}\n'
)
rep = report(ingest(records))
for c, r in rep.rows:
    print(f"{c.name:>6}: lhs {str(r.lhs):>5}  rhs {str(r.rhs):>5}  {r.verdict.value}")
print({v.value: k for v, k in rep.counts.items()})
print(rep.note)
