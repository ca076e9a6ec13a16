// JSON shapes mirrored from the service API.

export type DimensionCode = "AR" | "SI" | "VV" | "SG";

export type EventKind =
  | "HideChallenges"
  | "ShowAllChallenges"
  | "HideQuizzes"
  | "ShowAllQuizzes"
  | "TextExplanation"
  | "WatchVideo"
  | "GalleryView"
  | "ContentView";

export interface Plan {
  show_challenges: boolean;
  show_quizzes: boolean;
  primary_medium: "video" | "text";
  layout: "content" | "gallery";
  offered_toggles: EventKind[];
}

export interface Resource {
  title: string;
  url: string;
  kind: "video" | "text" | "quiz" | "challenge";
  order_index: number;
}

export interface PageData {
  module_id: string;
  plan: Plan;
  resources: Resource[];
}

export interface Profile {
  user_id: string;
  scores: Record<DimensionCode, number>;
  accumulators: Record<DimensionCode, number>;
}

export interface ModuleInfo {
  id: string;
  course: string | null;
}

export interface LoginResult {
  token: string;
  user_id: string;
  role: string;
  expires_at: number;
}

export interface EventResult {
  kind: EventKind;
  dimension: DimensionCode;
  delta: number;
  accumulator_after: number;
}

export type SurveySummary = Record<string, number | null>;
