import csv
import logging
import math
from dataclasses import asdict
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable, List, Sequence, Union

from marshmallow import EXCLUDE, Schema
from marshmallow import ValidationError as MarshmallowValidationError

from app.services.diagnostics_service.domain.entities.bound_iteration import BoundIteration
from app.services.diagnostics_service.domain.entities.diagnostics_record import (
    DiagnosticsRecord,
    IncrementTerms,
)
from app.services.diagnostics_service.domain.entities.growth_fit import GrowthFit
from app.services.run_service.infrastructure.persistence.csv_schemas import (
    BoundIterationRowSchema,
    DuhamelRowSchema,
    GrowthFitSchema,
    ProbeTrialSchema,
    diagnostics_columns,
    diagnostics_schema,
    hs_column,
)
from app.services.solver_service.application.use_cases.duhamel_check import DuhamelResidual
from app.services.xsb_service.domain.entities.probe_report import ProbeReport, ResolutionResult
from app.shared.domain.exceptions.common_errors import ConfigurationError, ResourceNotFoundError

# Configure logger
logger = logging.getLogger(__name__)

HEADER_PREFIX = "# generated "


class TableRepository:
    """
    CSV data files. Line one is ``# generated <timestamp>``; everything after
    it depends only on the data, so reruns are byte-identical below that line.
    """

    def write_rows(self, path: Union[str, Path], schema: Schema, columns: Sequence[str],
                   rows: Iterable[dict]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        with open(path, "w", newline="") as handle:
            handle.write(f"{HEADER_PREFIX}{stamp}\n")
            writer = csv.DictWriter(handle, fieldnames=list(columns), lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow(schema.dump(row))
        logger.info(f"Wrote {path}")
        return path

    def read_rows(self, path: Union[str, Path]) -> tuple:
        path = Path(path)
        if not path.is_file():
            raise ResourceNotFoundError(f"Data file not found: {path}")
        with open(path, newline="") as handle:
            lines = [line for line in handle if not line.startswith("#")]
        reader = csv.DictReader(lines)
        return list(reader.fieldnames or []), list(reader)

    # diagnostics

    def write_diagnostics(self, path, records: Sequence[DiagnosticsRecord], s_values: Sequence[float]) -> Path:
        schema = diagnostics_schema(s_values)()
        return self.write_rows(path, schema, diagnostics_columns(s_values),
                               (self._diagnostics_row(r, s_values) for r in records))

    def read_diagnostics(self, path) -> List[DiagnosticsRecord]:
        columns, rows = self.read_rows(path)
        if "t" not in columns:
            raise ConfigurationError(f"{path}: no 't' column in diagnostics file")
        s_values = [float(name[3:]) for name in columns if name.startswith("hs_")]
        schema = diagnostics_schema(s_values)(unknown=EXCLUDE)
        try:
            loaded = schema.load(rows, many=True)
        except MarshmallowValidationError as e:
            raise ConfigurationError(f"{path}: malformed diagnostics rows", errors=e.messages) from e
        return [self._diagnostics_record(row, s_values) for row in loaded]

    @staticmethod
    def _diagnostics_row(record: DiagnosticsRecord, s_values: Sequence[float]) -> dict:
        increment = record.increment
        row = {
            "t": record.t, "mass": record.mass, "hamiltonian": record.hamiltonian,
            "h1_u": record.h1_u, "l2_n": record.l2_n, "hneg1_ndot": record.hneg1_ndot,
            "I_total": increment.i_total if increment else math.nan,
            "I1": increment.i1 if increment else math.nan,
            "I2": increment.i2 if increment else math.nan,
            "I3": increment.i3 if increment else math.nan,
        }
        for s in s_values:
            row[hs_column(s)] = record.hs_norms.get(float(s), math.nan)
        return row

    @staticmethod
    def _diagnostics_record(row: dict, s_values: Sequence[float]) -> DiagnosticsRecord:
        increment = None
        if not math.isnan(row["I_total"]):
            increment = IncrementTerms(row["I_total"], row["I1"], row["I2"], row["I3"])
        return DiagnosticsRecord(
            t=row["t"], mass=row["mass"], hamiltonian=row["hamiltonian"], h1_u=row["h1_u"],
            l2_n=row["l2_n"], hneg1_ndot=row["hneg1_ndot"],
            hs_norms={float(s): row[hs_column(s)] for s in s_values},
            increment=increment,
        )

    # other tables

    def write_duhamel(self, path, residuals: Sequence[DuhamelResidual]) -> Path:
        return self.write_rows(path, DuhamelRowSchema(), ["t", "residual"],
                               ({"t": r.t, "residual": r.residual} for r in residuals))

    def write_growth_fit(self, path, fit: GrowthFit) -> Path:
        columns = ["s", "t_min", "exponent_alpha", "prefactor_c", "residual", "n_records"]
        return self.write_rows(path, GrowthFitSchema(), columns, [asdict(fit)])

    def write_bound_iteration(self, path, iteration: BoundIteration) -> Path:
        rows = ({"n": n, "x": float(x), "log_x_multiplicative": float(log_x)}
                for n, (x, log_x) in enumerate(zip(iteration.values, iteration.multiplicative_log_values)))
        return self.write_rows(path, BoundIterationRowSchema(), ["n", "x", "log_x_multiplicative"], rows)

    def write_probe_report(self, directory, report: ProbeReport) -> List[Path]:
        written = []
        for result in report.results:
            stem = Path(directory) / f"probe_{report.variant}_N{result.n_points}"
            rows = ({"trial": t.trial, "lhs": t.lhs, "rhs": t.rhs, "ratio": t.ratio} for t in result.trials)
            written.append(self.write_rows(stem.with_suffix(".csv"), ProbeTrialSchema(),
                                           ["trial", "lhs", "rhs", "ratio"], rows))
            written.append(self._write_meta(stem.with_suffix(".meta"), report, result))
        return written

    @staticmethod
    def _write_meta(path: Path, report: ProbeReport, result: ResolutionResult) -> Path:
        meta = dict(report.metadata)
        meta.update({
            "N": result.n_points,
            "M": result.m_steps,
            "max_ratio": format(result.max_ratio, ".17g"),
            "trials_kept": len(result.trials),
            "trials_discarded": result.discarded,
        })
        path.write_text("".join(f"{key} = {value}\n" for key, value in meta.items()))
        return path
