// Shared builders mirroring the server's plan composition and fixtures.

import type { EventKind, PageData, Plan, Resource } from "../src/types";

export type SignVector = [number, number, number, number]; // AR SI VV SG

export function allSignVectors(): SignVector[] {
  const out: SignVector[] = [];
  for (let bits = 0; bits < 16; bits++) {
    out.push([
      bits & 1 ? 1 : -1,
      bits & 2 ? 1 : -1,
      bits & 4 ? 1 : -1,
      bits & 8 ? 1 : -1,
    ]);
  }
  return out;
}

export function planFor([ar, si, vv, sg]: SignVector): Plan {
  return {
    show_challenges: ar > 0,
    show_quizzes: si > 0,
    primary_medium: vv > 0 ? "video" : "text",
    layout: sg > 0 ? "content" : "gallery",
    offered_toggles: [
      ar > 0 ? "HideChallenges" : "ShowAllChallenges",
      si > 0 ? "HideQuizzes" : "ShowAllQuizzes",
      vv > 0 ? "TextExplanation" : "WatchVideo",
      sg > 0 ? "GalleryView" : "ContentView",
    ] as EventKind[],
  };
}

const FULL_MODULE: Resource[] = [
  { title: "IntroVideo", url: "https://cdn.example/m1/intro.mp4", kind: "video", order_index: 1 },
  { title: "IntroText", url: "https://cdn.example/m1/intro.html", kind: "text", order_index: 2 },
  { title: "Quiz", url: "https://cdn.example/m1/quiz.html", kind: "quiz", order_index: 3 },
  { title: "Challenge", url: "https://cdn.example/m1/challenge.html", kind: "challenge", order_index: 4 },
];

export function visibleResources(plan: Plan): Resource[] {
  return FULL_MODULE.filter((r) => {
    if (r.kind === "challenge") return plan.show_challenges;
    if (r.kind === "quiz") return plan.show_quizzes;
    return r.kind === plan.primary_medium;
  });
}

export function pageFor(signs: SignVector, moduleId = "CS101_M1"): PageData {
  const plan = planFor(signs);
  return { module_id: moduleId, plan, resources: visibleResources(plan) };
}

export function vectorId(signs: SignVector): string {
  return signs.map((s) => (s > 0 ? "P" : "N")).join("");
}
