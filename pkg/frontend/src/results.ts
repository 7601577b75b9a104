/**
 * @fileoverview Typed access to the evaluation results CSV.
 *
 * The CSV is the only input this package reads. Its schema is fixed:
 * a header row naming exactly the twelve known columns in order, then
 * one row per (cell, deployment mode) with numeric score columns.
 * Unknown or reordered columns are rejected so that silent schema
 * drift upstream cannot produce misleading figures.
 */

/** Column names of the results CSV, in required order. */
export const RESULTS_COLUMNS = [
  "cell_id",
  "algorithm",
  "variant",
  "mode",
  "seeds",
  "iqm",
  "ci_low",
  "ci_high",
  "normalised",
  "fqe",
  "fqe_ci_low",
  "fqe_ci_high",
] as const;

/** One row of the results CSV. */
export interface ResultsRow {
  /** Cell identifier, `<environment>:<...>`, e.g. "grid:iql:unprocessed". */
  cellId: string;
  /** Environment name, the first segment of the cell identifier. */
  environment: string;
  /** Training algorithm ("bc", "iql", "cql") or baseline policy name. */
  algorithm: string;
  /** Dataset variant ("unprocessed", "binned-12", ...) or "baseline". */
  variant: string;
  /** Deployment mode the scores were measured under ("regular", "irregular"). */
  mode: string;
  /** Number of training seeds aggregated into the scores. */
  seeds: number;
  /** Interquartile mean of per-seed mean returns, raw score units. */
  iqm: number;
  /** Lower bootstrap confidence bound on the IQM. */
  ciLow: number;
  /** Upper bootstrap confidence bound on the IQM. */
  ciHigh: number;
  /** Normalised score (random policy 0, best observed 1), if recorded. */
  normalised: number | null;
  /** Off-policy value estimate in raw score units, if recorded. */
  fqe: number | null;
  /** Lower confidence bound on the value estimate, if recorded. */
  fqeCiLow: number | null;
  /** Upper confidence bound on the value estimate, if recorded. */
  fqeCiHigh: number | null;
}

/** Raised when the CSV does not match the documented schema. */
export class ResultsSchemaError extends Error {}

const FLOAT_PATTERN = /^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$/;
const INT_PATTERN = /^\d+$/;

function splitCsvLine(line: string, lineNo: number): string[] {
  if (line.includes('"')) {
    throw new ResultsSchemaError(
      `line ${lineNo}: quoted fields are not part of the results CSV contract`,
    );
  }
  return line.split(",");
}

function parseFloatField(value: string, column: string, lineNo: number): number {
  if (!FLOAT_PATTERN.test(value)) {
    throw new ResultsSchemaError(
      `line ${lineNo}: column ${column} has non-numeric value ${JSON.stringify(value)}`,
    );
  }
  return Number(value);
}

function parseOptionalField(value: string, column: string, lineNo: number): number | null {
  return value === "" ? null : parseFloatField(value, column, lineNo);
}

function requireText(value: string, column: string, lineNo: number): string {
  if (value === "") {
    throw new ResultsSchemaError(`line ${lineNo}: column ${column} is empty`);
  }
  return value;
}

/** Parses results CSV text into validated rows, rejecting schema drift. */
export function parseResultsCsv(text: string): ResultsRow[] {
  const lines = text.split(/\r?\n/);
  while (lines.length > 0 && lines[lines.length - 1] === "") {
    lines.pop();
  }
  if (lines.length === 0) {
    throw new ResultsSchemaError("results CSV is empty, expected a header row");
  }
  const header = splitCsvLine(lines[0]!, 1);
  const expected = RESULTS_COLUMNS as readonly string[];
  if (header.length !== expected.length || header.some((h, i) => h !== expected[i])) {
    const unknown = header.filter((h) => !expected.includes(h));
    const missing = expected.filter((c) => !header.includes(c));
    const details: string[] = [];
    if (unknown.length > 0) details.push(`unknown columns: ${unknown.join(", ")}`);
    if (missing.length > 0) details.push(`missing columns: ${missing.join(", ")}`);
    if (details.length === 0) details.push(`column order must be: ${expected.join(", ")}`);
    throw new ResultsSchemaError(`results CSV header mismatch (${details.join("; ")})`);
  }
  const rows: ResultsRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const lineNo = i + 1;
    const fields = splitCsvLine(lines[i]!, lineNo);
    if (fields.length !== expected.length) {
      throw new ResultsSchemaError(
        `line ${lineNo}: expected ${expected.length} fields, found ${fields.length}`,
      );
    }
    const [cellId, algorithm, variant, mode, seeds, iqm, ciLow, ciHigh, normalised, fqe, fqeCiLow, fqeCiHigh] =
      fields as [string, string, string, string, string, string, string, string, string, string, string, string];
    if (!INT_PATTERN.test(seeds)) {
      throw new ResultsSchemaError(
        `line ${lineNo}: column seeds has non-integer value ${JSON.stringify(seeds)}`,
      );
    }
    const id = requireText(cellId, "cell_id", lineNo);
    rows.push({
      cellId: id,
      environment: id.split(":")[0]!,
      algorithm: requireText(algorithm, "algorithm", lineNo),
      variant: requireText(variant, "variant", lineNo),
      mode: requireText(mode, "mode", lineNo),
      seeds: Number(seeds),
      iqm: parseFloatField(iqm, "iqm", lineNo),
      ciLow: parseFloatField(ciLow, "ci_low", lineNo),
      ciHigh: parseFloatField(ciHigh, "ci_high", lineNo),
      normalised: parseOptionalField(normalised, "normalised", lineNo),
      fqe: parseOptionalField(fqe, "fqe", lineNo),
      fqeCiLow: parseOptionalField(fqeCiLow, "fqe_ci_low", lineNo),
      fqeCiHigh: parseOptionalField(fqeCiHigh, "fqe_ci_high", lineNo),
    });
  }
  return rows;
}

/** Sort key ordering variants by increasing temporal abstraction. */
export function variantRank(variant: string): [number, number] {
  const match = variant.match(/^([a-z]+)(?:-(\d+))?$/);
  const kind = match ? match[1]! : variant;
  const width = match && match[2] ? Number(match[2]) : 0;
  const order: Record<string, number> = { unprocessed: 0, interpolated: 1, subsampled: 2, binned: 2 };
  const rank = order[kind] ?? 3;
  return [rank, width];
}

const ALGORITHM_ORDER: Record<string, number> = { bc: 0, iql: 1, cql: 2 };

/** Sort key placing the standard algorithms first, then alphabetical. */
export function algorithmRank(algorithm: string): [number, string] {
  return [ALGORITHM_ORDER[algorithm] ?? 3, algorithm];
}

/** Rows describing trained agents, excluding baseline policies. */
export function agentRows(rows: ResultsRow[]): ResultsRow[] {
  return rows.filter((r) => r.variant !== "baseline");
}

/** The baseline row for a policy in one environment and mode, if present. */
export function baselineRow(
  rows: ResultsRow[],
  environment: string,
  policy: string,
  mode: string,
): ResultsRow | null {
  return (
    rows.find(
      (r) =>
        r.variant === "baseline" &&
        r.environment === environment &&
        r.algorithm === policy &&
        r.mode === mode,
    ) ?? null
  );
}
