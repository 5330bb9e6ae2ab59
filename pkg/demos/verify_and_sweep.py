"""Compare computed components with the catalog, one algebra then a sweep."""
import json
import tempfile
from pathlib import Path

from lcg.catalog import AlgebraId
from lcg.field import make_field
from lcg.verify import sweep, verify

report = verify(AlgebraId("N4_5", (2, 3)), make_field(5), check_shapes=True)
doc = report.to_dict(timings=False)
print(json.dumps(doc["verdict"]), doc["computed"]["cc_count"], "components")

with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "sweep.json"
    result = sweep(3, dims=(2, 3, 4), path=out, shapes=False)
    print("sweep q <= 3:", result["summary"])
    for f in result["failures"]:
        print("  divergence:", f["algebra"], f["params"], f["field"], f["first_divergence"])
