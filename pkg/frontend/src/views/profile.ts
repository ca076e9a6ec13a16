// Profile view: each dimension's score marked on a -11..11 scale.

import type { DimensionCode, Profile } from "../types";

const POLE_NAMES: Record<DimensionCode, [string, string]> = {
  AR: ["Active", "Reflective"],
  SI: ["Sensing", "Intuitive"],
  VV: ["Visual", "Verbal"],
  SG: ["Sequential", "Global"],
};

export const SCALE: number[] = [];
for (let v = 11; v >= -11; v -= 2) SCALE.push(v);

function scaleRow(code: DimensionCode, score: number): string {
  const [positive, negative] = POLE_NAMES[code];
  const cells = SCALE.map((v) =>
    v === score
      ? `<td class="mark" data-value="${v}">X</td>`
      : `<td data-value="${v}">${Math.abs(v)}</td>`,
  ).join("");
  return (
    `<tr class="dimension" data-dimension="${code}">` +
    `<th class="pole">${positive}</th>${cells}<th class="pole">${negative}</th>` +
    `</tr>`
  );
}

export function renderProfile(profile: Profile): string {
  const rows = (Object.keys(POLE_NAMES) as DimensionCode[])
    .map((code) => scaleRow(code, profile.scores[code]))
    .join("\n");
  return [
    `<section class="profile" data-user="${profile.user_id}">`,
    `<h2>Learning style of ${profile.user_id}</h2>`,
    `<table class="ils-scale"><tbody>`,
    rows,
    `</tbody></table>`,
    `</section>`,
  ].join("\n");
}
