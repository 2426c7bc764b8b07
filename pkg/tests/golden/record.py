"""Re-record the golden outputs: ``python tests/golden/record.py``.

Only run this after checking that a changed output is intended.
"""

import io
import json
from pathlib import Path

from padicpairs.cli import run

HERE = Path(__file__).parent


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err, environ={})
    return code, out.getvalue(), err.getvalue()


def main():
    for case in json.loads((HERE / "cases.json").read_text()):
        code, out, err = invoke(case["argv"])
        if code != case["exit"]:
            raise SystemExit(f"{case['name']}: exit {code}, expected {case['exit']}\n{err}")
        (HERE / f"{case['name']}.out").write_text(out)
        (HERE / f"{case['name']}.err").write_text(err)


if __name__ == "__main__":
    main()
