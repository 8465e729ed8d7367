#!/usr/bin/env python3
"""The full orchestrated run: every scope, comparison table, and exports.

Equivalent to ``redlex analyze --corpus <mini corpus> --out demo_output`` but
driven through the library API.
"""

from pathlib import Path

from redlex.pipeline import AnalysisConfig, default_data_file, export_bundle, run_all

config = AnalysisConfig(corpus_path=str(default_data_file("mini_corpus.jsonl")), seed=0)

bundle = run_all(config)
data = bundle.data

print("scope status:")
for scope in data["scopes"]:
    if scope["status"] == "ok":
        note = f"{scope['documents']} docs"
        if scope.get("network"):
            note += f", network {scope['network']['n_vertices']}v/{scope['network']['n_edges']}e"
    else:
        note = scope["skip_reason"]
    print(f"  {scope['name']:<28} {scope['status']:<8} {note}")

print("\nbest-modularity comparison (bigram mode):")
print(f"  {'scope':<20} {'all':>8} {'appearers':>10} {'victims':>8}")
for row in data["modularity_table"]["rows"]:
    cells = [
        "-" if row[col] is None else f"{row[col]:.3f}"
        for col in ("all", "appearers", "victims")
    ]
    print(f"  {row['scope']:<20} {cells[0]:>8} {cells[1]:>10} {cells[2]:>8}")

general = data["scopes"][0]["sentiment"]
print("\ngeneral-scope sentiment tests:")
for metric, cascade in general["tests"].items():
    print(
        f"  {metric}: branch={cascade['branch']}, p={cascade['main']['p_value']:.3g}, "
        f"reject H0 (negative > positive): {cascade['reject_null']}"
    )

out = Path("demo_output")
written = export_bundle(bundle, out)
print(f"\nexported {len(written)} files under {out}/ (report.json, CSVs, DOT, GraphML)")
