#!/usr/bin/env node
/**
 * @fileoverview Command line entry point.
 *
 * Usage: orl-plots --results <csv> --out <dir>
 *
 * Reads one results CSV, writes every figure it supports as both SVG
 * and PNG into the output directory, and prints one line per file.
 * The output is a pure function of the CSV contents.
 */

import * as fs from "node:fs";
import * as path from "node:path";
import { parseArgs } from "node:util";
import { AnchorError, buildCalibrationCharts } from "./calibration";
import { ChartImage, buildReturnsCharts } from "./returns";
import { ResultsSchemaError, parseResultsCsv } from "./results";
import { svgToPng } from "./render";

const USAGE = "usage: orl-plots --results <csv> --out <dir>";

function writeChart(outDir: string, chart: ChartImage): string[] {
  const svgPath = path.join(outDir, `${chart.name}.svg`);
  const pngPath = path.join(outDir, `${chart.name}.png`);
  fs.writeFileSync(svgPath, chart.svg);
  fs.writeFileSync(pngPath, svgToPng(chart.svg));
  return [svgPath, pngPath];
}

/** Runs the tool; returns the process exit code. */
export function main(argv: string[]): number {
  let results: string | undefined;
  let out: string | undefined;
  try {
    const parsed = parseArgs({
      args: argv,
      options: {
        results: { type: "string" },
        out: { type: "string" },
      },
    });
    results = parsed.values.results;
    out = parsed.values.out;
  } catch (err) {
    console.error((err as Error).message);
    console.error(USAGE);
    return 2;
  }
  if (results === undefined || out === undefined) {
    console.error(USAGE);
    return 2;
  }

  let text: string;
  try {
    text = fs.readFileSync(results, "utf8");
  } catch (err) {
    console.error(`cannot read results CSV: ${(err as Error).message}`);
    return 1;
  }

  let rows;
  try {
    rows = parseResultsCsv(text);
  } catch (err) {
    if (err instanceof ResultsSchemaError) {
      console.error(`invalid results CSV: ${err.message}`);
      return 1;
    }
    throw err;
  }

  if (rows.length === 0) {
    console.log("results CSV has no data rows, no images written");
    return 0;
  }

  fs.mkdirSync(out, { recursive: true });
  const written: string[] = [];

  for (const chart of buildReturnsCharts(rows)) {
    written.push(...writeChart(out, chart));
    for (const note of chart.omitted) {
      console.log(`${chart.name}: omitted cell with no data: ${note}`);
    }
  }

  let calibration;
  try {
    calibration = buildCalibrationCharts(rows);
  } catch (err) {
    if (err instanceof AnchorError) {
      console.error(err.message);
      return 1;
    }
    throw err;
  }
  if (calibration.skipped !== null) {
    console.log(calibration.skipped);
  }
  for (const chart of calibration.charts) {
    written.push(...writeChart(out, chart));
  }

  for (const file of written) {
    console.log(`wrote ${file}`);
  }
  console.log(`${written.length} files from ${rows.length} rows`);
  return 0;
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
