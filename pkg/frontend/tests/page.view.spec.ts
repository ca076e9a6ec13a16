// The rendered composition is a pure function of the fetched plan.

import { describe, expect, it } from "vitest";

import { renderPage, TOGGLE_LABELS } from "../src/views/page";
import { allSignVectors, pageFor, vectorId } from "./helpers";

describe("module page rendering", () => {
  for (const signs of allSignVectors()) {
    it(`matches snapshot for sign vector ${vectorId(signs)}`, () => {
      expect(renderPage(pageFor(signs))).toMatchSnapshot();
    });
  }

  it("renders exactly the plan's offered toggles", () => {
    for (const signs of allSignVectors()) {
      const page = pageFor(signs);
      const html = renderPage(page);
      const rendered = [...html.matchAll(/data-event="(\w+)"/g)].map((m) => m[1]);
      expect(rendered).toEqual(page.plan.offered_toggles);
      for (const kind of page.plan.offered_toggles) {
        expect(html).toContain(TOGGLE_LABELS[kind]);
      }
    }
  });

  it("is a pure function of the page data", () => {
    const page = pageFor([1, -1, 1, -1]);
    expect(renderPage(page)).toEqual(renderPage(structuredClone(page)));
  });

  it("gallery layout uses the grid, content layout the list", () => {
    expect(renderPage(pageFor([1, 1, 1, 1]))).toContain('class="resources list"');
    expect(renderPage(pageFor([1, 1, 1, -1]))).toContain('class="resources grid"');
  });

  it("hidden kinds never render", () => {
    const html = renderPage(pageFor([-1, -1, -1, -1]));
    expect(html).not.toContain('data-kind="challenge"');
    expect(html).not.toContain('data-kind="quiz"');
    expect(html).not.toContain('data-kind="video"');
    expect(html).toContain('data-kind="text"');
  });

  it("escapes resource titles and urls", () => {
    const page = pageFor([1, 1, 1, 1]);
    page.resources[0] = {
      ...page.resources[0],
      title: '<script>alert("x")</script>',
    };
    const html = renderPage(page);
    expect(html).not.toContain("<script>alert");
    expect(html).toContain("&lt;script&gt;");
  });
});
