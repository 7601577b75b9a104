/**
 * @fileoverview Public API of the figure generation package.
 */

export {
  RESULTS_COLUMNS,
  ResultsRow,
  ResultsSchemaError,
  agentRows,
  algorithmRank,
  baselineRow,
  parseResultsCsv,
  variantRank,
} from "./results";
export { ChartImage, buildReturnsCharts, variantFills } from "./returns";
export {
  AnchorError,
  CalibrationPoint,
  CalibrationResult,
  buildCalibrationCharts,
} from "./calibration";
export { PNG_ZOOM, svgToPng } from "./render";
export { main } from "./cli";
