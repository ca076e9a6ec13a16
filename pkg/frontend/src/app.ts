// SPA bootstrap: hash routing and DOM event wiring over the pure views.

import { ApiClient, ApiError } from "./api";
import { PageController } from "./controllers/pageController";
import { QuestionnaireController } from "./controllers/questionnaireController";
import { renderAdmin } from "./views/admin";
import { escapeHtml } from "./views/page";
import { renderProfile } from "./views/profile";
import { renderSurveySummary } from "./views/survey";
import type { EventKind } from "./types";

const api = new ApiClient();
let root: HTMLElement;
let pageController: PageController | null = null;
let questionnaireController: QuestionnaireController | null = null;

function setHtml(html: string): void {
  root.innerHTML = html;
}

function renderLogin(message = ""): void {
  setHtml(`
    <form class="login" data-view="login">
      ${message ? `<p class="error-banner">${escapeHtml(message)}</p>` : ""}
      <label>Name <input name="name" autocomplete="username"></label>
      <label>Password <input name="password" type="password"
             autocomplete="current-password"></label>
      <button type="submit" data-action="login">Log in</button>
      <button type="button" data-action="register">Register</button>
    </form>`);
}

async function showFirstModulePage(): Promise<void> {
  const { modules } = await api.fetchModules();
  if (modules.length === 0) {
    setHtml(`<p>No modules available.</p>`);
    return;
  }
  location.hash = `#/module/${modules[0].id}`;
}

async function route(): Promise<void> {
  const hash = location.hash || "#/login";
  const [, view, arg] = hash.split("/");
  try {
    switch (view) {
      case "questionnaire": {
        questionnaireController = new QuestionnaireController(
          api,
          () => void showFirstModulePage(),
          () => setHtml(questionnaireController!.render()),
        );
        setHtml(questionnaireController.render());
        break;
      }
      case "module": {
        pageController = new PageController(api, arg, () =>
          setHtml(pageController!.render()),
        );
        setHtml(pageController.render());
        await pageController.load();
        break;
      }
      case "profile": {
        setHtml(renderProfile(await api.fetchProfile()));
        break;
      }
      case "survey": {
        const { summary, responses } = await api.fetchSurveySummary();
        setHtml(renderSurveySummary(summary, responses));
        break;
      }
      case "admin": {
        const [{ agents }, trace] = await Promise.all([
          api.fetchAdminAgents(),
          api.fetchAdminTrace(),
        ]);
        setHtml(renderAdmin(agents, trace));
        break;
      }
      default:
        renderLogin();
    }
  } catch (err) {
    if (err instanceof ApiError && err.status === 401) {
      renderLogin("Please log in first.");
    } else if (err instanceof ApiError && err.status === 404 && view === "profile") {
      location.hash = "#/questionnaire";
    } else {
      setHtml(`<p class="error-banner">${escapeHtml(String(err))}</p>`);
    }
  }
}

async function handleLoginSubmit(form: HTMLFormElement, register: boolean): Promise<void> {
  const data = new FormData(form);
  const name = String(data.get("name") ?? "");
  const password = String(data.get("password") ?? "");
  try {
    if (register) await api.register(name, password);
    await api.login(name, password);
    try {
      await api.fetchProfile();
      await showFirstModulePage();
    } catch (err) {
      if (err instanceof ApiError && err.status === 404) {
        location.hash = "#/questionnaire";
      } else {
        throw err;
      }
    }
  } catch (err) {
    renderLogin(err instanceof Error ? err.message : String(err));
  }
}

function wireEvents(): void {
  root.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    const toggle = target.closest<HTMLElement>("button.toggle");
    if (toggle && pageController) {
      event.preventDefault();
      void pageController.clickToggle(toggle.dataset.event as EventKind);
      return;
    }
    if (target.closest("button.retry") && pageController) {
      event.preventDefault();
      void pageController.retry();
      return;
    }
    const registerButton = target.closest<HTMLElement>("[data-action=register]");
    if (registerButton) {
      event.preventDefault();
      const form = registerButton.closest("form");
      if (form) void handleLoginSubmit(form as HTMLFormElement, true);
    }
  });

  root.addEventListener("change", (event) => {
    const input = event.target as HTMLInputElement;
    if (input.dataset.question !== undefined && questionnaireController) {
      questionnaireController.answer(
        Number(input.dataset.question),
        input.value === "A" ? "A" : "B",
      );
    }
  });

  root.addEventListener("submit", (event) => {
    const form = event.target as HTMLFormElement;
    event.preventDefault();
    if (form.matches("form.login")) {
      void handleLoginSubmit(form, false);
    } else if (form.matches("form.questionnaire") && questionnaireController) {
      void questionnaireController.submit();
    }
  });
}

export function start(mount: HTMLElement): void {
  root = mount;
  wireEvents();
  window.addEventListener("hashchange", () => void route());
  void route();
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  start(document.getElementById("app")!);
}
