"""
Measure spaces with a simple function on them.

JSON:  {"atoms": [{"weight": 1, "value": 2}, {"weight": 1, "value": 1}]}
       [[1, 2], [1, 1]] is the same two atoms as [weight, value] pairs.
CSV:   weight,value rows, optional header line.
"""

from __future__ import annotations

import csv
import io
from typing import Any

from ..exceptions import InvalidDescriptorError
from ..measure import MeasureSpace, SimpleFunction
from .json_output import decode_real

CSV_HEADER = ("weight", "value")


class MeasureSerializer:

    def serialize(self, f: SimpleFunction) -> dict[str, Any]:
        return {
            "atoms": [
                {"weight": w, "value": v}
                for w, v in zip(f.weights, f.values)
            ]
        }

    def deserialize(self, data: Any) -> SimpleFunction:
        if isinstance(data, list):
            data = {"atoms": data}
        if not isinstance(data, dict):
            raise InvalidDescriptorError(
                "atoms", "expected an object with an atoms list"
            )
        atoms = data.get("atoms")
        if not isinstance(atoms, list):
            raise InvalidDescriptorError(
                "atoms", "expected a list of {weight, value} objects"
            )

        weights: list[float] = []
        values: list[float] = []
        for k, atom in enumerate(atoms):
            weight, value = self._deserialize_atom(atom, k)
            weights.append(weight)
            values.append(value)

        return SimpleFunction(
            MeasureSpace(tuple(weights)), tuple(values)
        )

    def _deserialize_atom(
        self, atom: Any, k: int
    ) -> tuple[float, float]:
        field = f"atoms[{k}]"
        if isinstance(atom, list) and len(atom) == 2:
            atom = dict(zip(CSV_HEADER, atom))
        if not isinstance(atom, dict):
            raise InvalidDescriptorError(
                field, "expected a {weight, value} object"
            )
        for key in CSV_HEADER:
            if key not in atom:
                raise InvalidDescriptorError(
                    f"{field}.{key}", "is required"
                )
        weight = decode_real(atom["weight"], f"{field}.weight")
        value = atom["value"]
        if isinstance(value, (int, float)) and not isinstance(
            value, bool
        ):
            value = abs(value)
        return weight, decode_real(value, f"{field}.value")

    # =========================================================================
    # CSV
    # =========================================================================

    def to_csv(self, f: SimpleFunction) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for w, v in zip(f.weights, f.values):
            writer.writerow([repr(w), repr(v)])
        return buffer.getvalue()

    def from_csv(self, text: str) -> SimpleFunction:
        rows = [
            row
            for row in csv.reader(io.StringIO(text))
            if row and any(cell.strip() for cell in row)
        ]
        if rows and [c.strip().lower() for c in rows[0]] == list(
            CSV_HEADER
        ):
            rows = rows[1:]

        atoms = []
        for k, row in enumerate(rows):
            if len(row) != 2:
                raise InvalidDescriptorError(
                    f"atoms[{k}]",
                    f"expected weight,value but got {len(row)} columns",
                )
            atom = {}
            for key, cell in zip(CSV_HEADER, row):
                try:
                    atom[key] = float(cell)
                except ValueError:
                    raise InvalidDescriptorError(
                        f"atoms[{k}].{key}",
                        f"not a number: {cell.strip()!r}",
                    )
            atoms.append(atom)
        return self.deserialize({"atoms": atoms})
