// Learning-style questionnaire: 44 forced-choice A/B questions.

import { escapeHtml } from "./page";

export const QUESTION_COUNT = 44;

export type Answer = "A" | "B" | null;

export interface QuestionnaireState {
  answers: Answer[];
  error: string | null;
}

export function emptyQuestionnaire(): QuestionnaireState {
  return { answers: new Array<Answer>(QUESTION_COUNT).fill(null), error: null };
}

export function answeredCount(state: QuestionnaireState): number {
  return state.answers.filter((a) => a !== null).length;
}

export function isComplete(state: QuestionnaireState): boolean {
  return answeredCount(state) === QUESTION_COUNT;
}

export function withAnswer(
  state: QuestionnaireState,
  index: number,
  answer: Answer,
): QuestionnaireState {
  const answers = state.answers.slice();
  answers[index] = answer;
  return { ...state, answers };
}

// Generic stand-in wording; the published instrument's question text is
// deliberately not reproduced here.
function questionLabel(index: number): string {
  return `Question ${index + 1}: which option sounds more like you?`;
}

function questionRow(index: number, answer: Answer): string {
  const pick = (option: "A" | "B") =>
    `<label><input type="radio" name="q${index}" value="${option}"` +
    `${answer === option ? " checked" : ""} data-question="${index}"> ` +
    `${option}</label>`;
  return (
    `<fieldset class="question" data-question="${index}">` +
    `<legend>${questionLabel(index)}</legend>` +
    pick("A") +
    pick("B") +
    `</fieldset>`
  );
}

export function renderQuestionnaire(state: QuestionnaireState): string {
  const rows = state.answers
    .map((answer, index) => questionRow(index, answer))
    .join("\n");
  const done = isComplete(state);
  const banner = state.error
    ? `<p class="error-banner">${escapeHtml(state.error)}</p>`
    : "";
  return [
    `<form class="questionnaire" data-view="questionnaire">`,
    banner,
    rows,
    `<p class="progress">${answeredCount(state)} / ${QUESTION_COUNT} answered</p>`,
    `<button type="submit" class="submit"${done ? "" : " disabled"}>Submit</button>`,
    `</form>`,
  ].join("\n");
}
