import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from graded_oracle import crosscheck
from milnor_algebra import milnor_data
from normal_forms import catalog_germ, catalog_labels


def sweep(lam=1):
    print("--- Simple germ sweep (theorem vs oracle) ---")
    failures = 0
    for label in catalog_labels(lam):
        germ = catalog_germ(label, d_form=True)
        data = milnor_data(germ.f, germ.weights)
        record = crosscheck(germ, label=label)
        mark = "OK  " if record.agreed and data.c == label.k else "FAIL"
        if mark == "FAIL":
            failures += 1
        print(f"  {mark} {str(label):5} f={germ.f}  h={germ.h}  w=({germ.weights})  c={data.codimension_text()}"
              f"  theorem={record.theorem}  oracle={record.oracle}")
        for note in record.notes:
            print(f"       note: {note}")
    print(f"\n{failures} failure(s)")
    return failures


if __name__ == "__main__":
    sys.exit(1 if sweep() else 0)
