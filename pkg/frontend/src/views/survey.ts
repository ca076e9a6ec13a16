// Survey results: a simple bar list of per-dimension averages.

import type { SurveySummary } from "../types";

const MAX_SCORE = 5;

export function renderSurveySummary(
  summary: SurveySummary,
  responses: number,
): string {
  const rows = Object.entries(summary)
    .map(([dimension, average]) => {
      if (average === null) {
        return (
          `<li class="bar-row" data-dimension="${dimension}">` +
          `<span class="label">${dimension}</span>` +
          `<span class="no-data">no data</span></li>`
        );
      }
      const width = Math.round((average / MAX_SCORE) * 100);
      return (
        `<li class="bar-row" data-dimension="${dimension}">` +
        `<span class="label">${dimension}</span>` +
        `<span class="bar" style="width:${width}%"></span>` +
        `<span class="value">${average.toFixed(2)}</span></li>`
      );
    })
    .join("\n");
  return [
    `<section class="survey-summary" data-responses="${responses}">`,
    `<h2>Evaluation survey (${responses} responses)</h2>`,
    `<ul class="bars">`,
    rows,
    `</ul>`,
    `</section>`,
  ].join("\n");
}
