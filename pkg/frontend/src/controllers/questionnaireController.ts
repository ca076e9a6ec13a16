// Questionnaire controller: submit stays blocked until all 44 are answered;
// an API rejection surfaces as a banner and preserves the answers.

import type { Answer, QuestionnaireState } from "../views/questionnaire";
import {
  emptyQuestionnaire,
  isComplete,
  renderQuestionnaire,
  withAnswer,
} from "../views/questionnaire";

export interface QuestionnaireApi {
  submitIls(answers: string[]): Promise<unknown>;
}

export class QuestionnaireController {
  state: QuestionnaireState = emptyQuestionnaire();

  constructor(
    private readonly api: QuestionnaireApi,
    private readonly onSubmitted: () => void = () => {},
    private readonly onChange: () => void = () => {},
  ) {}

  answer(index: number, value: Answer): void {
    this.state = withAnswer(this.state, index, value);
    this.onChange();
  }

  get canSubmit(): boolean {
    return isComplete(this.state);
  }

  /** Returns false when blocked (incomplete form). */
  async submit(): Promise<boolean> {
    if (!this.canSubmit) return false;
    try {
      await this.api.submitIls(this.state.answers as string[]);
    } catch (err) {
      this.state = {
        ...this.state,
        error: String(err instanceof Error ? err.message : err),
      };
      this.onChange();
      return true;
    }
    this.state = { ...this.state, error: null };
    this.onSubmitted();
    return true;
  }

  render(): string {
    return renderQuestionnaire(this.state);
  }
}
