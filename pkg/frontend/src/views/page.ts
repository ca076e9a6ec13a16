// Personalized module page: a pure function of the fetched page data.

import type { EventKind, PageData, Resource } from "../types";

export const TOGGLE_LABELS: Record<EventKind, string> = {
  HideChallenges: "Hide Challenges",
  ShowAllChallenges: "All Challenges",
  HideQuizzes: "Hide Quizzes",
  ShowAllQuizzes: "All Quizzes",
  TextExplanation: "Text Explanation",
  WatchVideo: "Watch Video",
  GalleryView: "Gallery View",
  ContentView: "Content View",
};

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function resourceCard(resource: Resource): string {
  return [
    `<article class="card card-${resource.kind}" data-kind="${resource.kind}">`,
    `<h3>${escapeHtml(resource.title)}</h3>`,
    `<a href="${escapeHtml(resource.url)}" target="_blank" rel="noopener">open ${resource.kind}</a>`,
    `</article>`,
  ].join("");
}

function toggleButton(kind: EventKind): string {
  return (
    `<button class="toggle" data-event="${kind}">` +
    `${TOGGLE_LABELS[kind]}</button>`
  );
}

export function renderPage(page: PageData): string {
  const { plan } = page;
  const cards = page.resources.map(resourceCard).join("\n");
  const toggles = plan.offered_toggles.map(toggleButton).join("\n");
  const mediumNote =
    plan.primary_medium === "video"
      ? "Lessons open as videos."
      : "Lessons open as text explanations.";
  return [
    `<section class="module-page layout-${plan.layout}" data-module="${escapeHtml(page.module_id)}">`,
    `<header><h2>${escapeHtml(page.module_id)}</h2>`,
    `<p class="medium-note">${mediumNote}</p></header>`,
    `<div class="resources ${plan.layout === "gallery" ? "grid" : "list"}">`,
    cards,
    `</div>`,
    `<footer class="toggles">`,
    toggles,
    `</footer>`,
    `</section>`,
  ].join("\n");
}

export function renderPageError(message: string): string {
  return (
    `<section class="module-page error">` +
    `<p class="error-banner">${escapeHtml(message)}</p>` +
    `<button class="retry" data-action="retry">Retry</button>` +
    `</section>`
  );
}
