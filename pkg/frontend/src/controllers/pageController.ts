// Module-page controller: server-driven recomposition, one event in flight.
//
// No optimistic UI: the page re-renders only from refetched server state,
// so a dimension flip settled on the server shows up on the next refetch.
// At most one /events POST can be in flight; extra clicks are dropped.  A
// failed POST offers a retry that re-sends the event; a failed refetch
// retries the fetch only, so the event is never duplicated.

import type { EventKind, PageData } from "../types";
import { renderPage, renderPageError } from "../views/page";

export interface PageApi {
  postEvent(kind: EventKind): Promise<unknown>;
  fetchPage(moduleId: string): Promise<PageData>;
}

type FailedPhase = "post" | "refetch" | null;

export class PageController {
  page: PageData | null = null;
  error: string | null = null;
  private inflight = false;
  private failedPhase: FailedPhase = null;
  private failedKind: EventKind | null = null;

  constructor(
    private readonly api: PageApi,
    readonly moduleId: string,
    private readonly onChange: () => void = () => {},
  ) {}

  get busy(): boolean {
    return this.inflight;
  }

  async load(): Promise<void> {
    try {
      this.page = await this.api.fetchPage(this.moduleId);
      this.error = null;
      this.failedPhase = null;
    } catch (err) {
      this.error = String(err instanceof Error ? err.message : err);
      this.failedPhase = "refetch";
    }
    this.onChange();
  }

  /** Handle a toggle click; returns false when the click was dropped. */
  async clickToggle(kind: EventKind): Promise<boolean> {
    if (this.inflight) return false;
    this.inflight = true;
    try {
      try {
        await this.api.postEvent(kind);
      } catch (err) {
        this.error = String(err instanceof Error ? err.message : err);
        this.failedPhase = "post";
        this.failedKind = kind;
        this.onChange();
        return true;
      }
      await this.refetch();
      return true;
    } finally {
      this.inflight = false;
    }
  }

  async retry(): Promise<void> {
    if (this.inflight) return;
    if (this.failedPhase === "post" && this.failedKind !== null) {
      const kind = this.failedKind;
      this.failedPhase = null;
      this.failedKind = null;
      await this.clickToggle(kind);
    } else if (this.failedPhase === "refetch") {
      this.inflight = true;
      try {
        await this.refetch();
      } finally {
        this.inflight = false;
      }
    }
  }

  private async refetch(): Promise<void> {
    try {
      this.page = await this.api.fetchPage(this.moduleId);
      this.error = null;
      this.failedPhase = null;
      this.failedKind = null;
    } catch (err) {
      this.error = String(err instanceof Error ? err.message : err);
      this.failedPhase = "refetch";
    }
    this.onChange();
  }

  render(): string {
    if (this.error !== null) return renderPageError(this.error);
    if (this.page === null) return `<section class="module-page loading">Loading...</section>`;
    return renderPage(this.page);
  }
}
