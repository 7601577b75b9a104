/**
 * @fileoverview Calibration scatter of value estimates against deployment.
 *
 * Each cell carrying an off-policy value estimate is plotted as
 * (true normalised return, predicted normalised return) with error bars
 * on both axes and a y=x reference diagonal. Both axes are normalised
 * against the same anchors the results pipeline uses: the random-policy
 * baseline maps to 0 and the expert behaviour baseline maps to 1, both
 * taken from the baseline rows of the same CSV. Points above the
 * diagonal are cells whose value estimate overstates deployment return.
 */

import {
  ResultsRow,
  agentRows,
  algorithmRank,
  baselineRow,
  variantRank,
} from "./results";
import { ChartImage, variantFills } from "./returns";
import * as svg from "./svg";

/** One plotted calibration cell. */
export interface CalibrationPoint {
  environment: string;
  algorithm: string;
  variant: string;
  /** Deployment return, normalised (random 0, expert behaviour 1). */
  trueNormalised: number;
  /** Value-estimate prediction, normalised with the same anchors. */
  predictedNormalised: number;
  /** predictedNormalised minus trueNormalised; positive means overestimation. */
  gap: number;
}

/** Calibration output: charts, the plotted points, or a skip reason. */
export interface CalibrationResult {
  charts: ChartImage[];
  points: CalibrationPoint[];
  /** Set when no row carries a value estimate, with the message to print. */
  skipped: string | null;
}

/** Raised when calibration rows exist but normalisation anchors do not. */
export class AnchorError extends Error {}

const PLOT = 420;
const MARGIN_LEFT = 74;
const MARGIN_TOP = 46;
const MARGIN_RIGHT = 26;

function compareCells(a: ResultsRow, b: ResultsRow): number {
  const ka = [...algorithmRank(a.algorithm), ...variantRank(a.variant), a.variant];
  const kb = [...algorithmRank(b.algorithm), ...variantRank(b.variant), b.variant];
  for (let i = 0; i < ka.length; i++) {
    if (ka[i]! < kb[i]!) return -1;
    if (ka[i]! > kb[i]!) return 1;
  }
  return 0;
}

function buildChart(
  env: string,
  cells: ResultsRow[],
  envVariants: string[],
  randomAnchor: number,
  expertAnchor: number,
): { chart: ChartImage; points: CalibrationPoint[] } {
  const norm = (v: number): number => (v - randomAnchor) / (expertAnchor - randomAnchor);
  const fills = variantFills(envVariants);
  const points: CalibrationPoint[] = [];

  let lo = 0;
  let hi = 1;
  interface Placed {
    row: ResultsRow;
    x: number;
    y: number;
    xLo: number;
    xHi: number;
    yLo: number;
    yHi: number;
  }
  const placed: Placed[] = [];
  for (const row of cells) {
    const x = norm(row.iqm);
    const y = norm(row.fqe!);
    const xLo = norm(row.ciLow);
    const xHi = norm(row.ciHigh);
    const yLo = row.fqeCiLow === null ? y : norm(row.fqeCiLow);
    const yHi = row.fqeCiHigh === null ? y : norm(row.fqeCiHigh);
    placed.push({ row, x, y, xLo, xHi, yLo, yHi });
    points.push({
      environment: env,
      algorithm: row.algorithm,
      variant: row.variant,
      trueNormalised: x,
      predictedNormalised: y,
      gap: y - x,
    });
    lo = Math.min(lo, xLo, yLo);
    hi = Math.max(hi, xHi, yHi);
  }
  const pad = (hi - lo) * 0.07;
  lo -= pad;
  hi += pad;
  const sx: svg.Scale = { lo, hi, pxLo: MARGIN_LEFT, pxHi: MARGIN_LEFT + PLOT };
  const sy: svg.Scale = { lo, hi, pxLo: MARGIN_TOP + PLOT, pxHi: MARGIN_TOP };

  const body: string[] = [];
  const left = MARGIN_LEFT;
  const right = MARGIN_LEFT + PLOT;
  const top = MARGIN_TOP;
  const bottom = MARGIN_TOP + PLOT;

  const ticks = svg.niceTicks(lo, hi, 6);
  for (const tick of ticks) {
    const px = svg.scale(sx, tick);
    const py = svg.scale(sy, tick);
    body.push(svg.line(px, top, px, bottom, "#eeeeee"));
    body.push(svg.line(left, py, right, py, "#eeeeee"));
    body.push(svg.text(px, bottom + 16, svg.tickLabel(tick), 11, "middle", "#444444"));
    body.push(svg.text(left - 8, py + 3.5, svg.tickLabel(tick), 11, "end", "#444444"));
  }

  body.push(svg.line(svg.scale(sx, lo), svg.scale(sy, lo), svg.scale(sx, hi), svg.scale(sy, hi), "#999999", 1, "6,4"));

  for (const p of placed) {
    body.push(svg.line(svg.scale(sx, p.xLo), svg.scale(sy, p.y), svg.scale(sx, p.xHi), svg.scale(sy, p.y), "#555555"));
    body.push(svg.line(svg.scale(sx, p.x), svg.scale(sy, p.yLo), svg.scale(sx, p.x), svg.scale(sy, p.yHi), "#555555"));
  }
  for (const p of placed) {
    body.push(svg.circle(svg.scale(sx, p.x), svg.scale(sy, p.y), 4.5, fills.get(p.row.variant)!));
    body.push(svg.text(svg.scale(sx, p.x) + 7, svg.scale(sy, p.y) - 7, p.row.algorithm, 10, "start", "#333333"));
  }

  body.push(svg.line(left, bottom, right, bottom, "#222222"));
  body.push(svg.line(left, top, left, bottom, "#222222"));

  const title = `${env} environment, value-estimate calibration`;
  body.push(svg.text(left, 24, title, 16, "start"));
  body.push(
    svg.text(left + PLOT / 2, bottom + 38, "true normalised return (random = 0, expert behaviour = 1)", 12, "middle"),
  );
  body.push(
    svg.text(22, top + PLOT / 2, "predicted normalised return (random = 0, expert behaviour = 1)", 12, "middle", "#222222", -90),
  );

  const legendTop = bottom + 58;
  let ly = legendTop;
  const seen = [...new Set(cells.map((c) => c.variant))];
  const ordered = envVariants.filter((v) => seen.includes(v));
  let lx = left;
  for (const variant of ordered) {
    const w = 14 + 7 * variant.length + 24;
    if (lx + w > right && lx > left) {
      lx = left;
      ly += 18;
    }
    body.push(svg.circle(lx + 6, ly - 4, 4.5, fills.get(variant)!));
    body.push(svg.text(lx + 16, ly, variant, 11));
    lx += w;
  }
  ly += 18;
  body.push(svg.text(left, ly, "dashed diagonal: estimate matches deployment (y = x)", 11, "start", "#666666"));

  const height = Math.ceil(ly + 14);
  const width = MARGIN_LEFT + PLOT + MARGIN_RIGHT;
  return {
    chart: {
      name: `calibration-${env}`,
      title,
      svg: svg.document(width, height, body),
      omitted: [],
    },
    points,
  };
}

/** Builds one calibration scatter per environment with value estimates. */
export function buildCalibrationCharts(rows: ResultsRow[]): CalibrationResult {
  const cells = agentRows(rows)
    .filter((r) => r.mode === "irregular" && r.fqe !== null)
    .sort(compareCells);
  if (cells.length === 0) {
    return {
      charts: [],
      points: [],
      skipped: "no value-estimate rows in results CSV, calibration plot skipped",
    };
  }
  const environments = [...new Set(cells.map((r) => r.environment))].sort();
  const charts: ChartImage[] = [];
  const points: CalibrationPoint[] = [];
  for (const env of environments) {
    const random = baselineRow(rows, env, "random", "irregular");
    const expert = baselineRow(rows, env, "expert", "irregular");
    if (random === null || expert === null) {
      throw new AnchorError(
        `calibration for ${env} needs random and expert baseline rows in irregular mode`,
      );
    }
    if (expert.iqm === random.iqm) {
      throw new AnchorError(`degenerate normalisation anchors for ${env}`);
    }
    const envCells = cells.filter((r) => r.environment === env);
    const envVariants = [...new Set(agentRows(rows).filter((r) => r.environment === env).map((r) => r.variant))]
      .sort((a, b) => {
        const ka = [...variantRank(a), a];
        const kb = [...variantRank(b), b];
        for (let i = 0; i < ka.length; i++) {
          if (ka[i]! < kb[i]!) return -1;
          if (ka[i]! > kb[i]!) return 1;
        }
        return 0;
      });
    const built = buildChart(env, envCells, envVariants, random.iqm, expert.iqm);
    charts.push(built.chart);
    points.push(...built.points);
  }
  return { charts, points, skipped: null };
}
