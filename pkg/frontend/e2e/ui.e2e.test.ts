// Scripted end-to-end pass over the human search loop, driving the real app
// (state transitions + fetch + DOM rendering) against a live service.

import { beforeEach, describe, expect, it } from "vitest";

import { createApp, type App } from "../src/app.js";

const base = process.env.E2E_BASE ?? "http://127.0.0.1:8931";

function freshApp(): App {
  document.body.innerHTML = '<div id="app"></div>';
  return createApp(document.getElementById("app")!, base);
}

function thumbs(): HTMLElement[] {
  return [...document.querySelectorAll<HTMLElement>("#thumbnail-grid .thumb")];
}

function chartSvg(): Element | null {
  return document.querySelector("#qa-panel #chart-container svg");
}

describe("hybrid search UI loop", () => {
  let app: App;

  beforeEach(async () => {
    app = freshApp();
    await app.init();
  });

  it("landing page lists data sources, a sample grid, and a placeholder query", () => {
    expect(document.querySelectorAll(".ds-card").length).toBe(8);
    expect(thumbs().length).toBeGreaterThan(0);
    const input = document.querySelector<HTMLInputElement>("#search-input")!;
    expect(input.placeholder.length).toBeGreaterThan(0);
  });

  it("analytic trend question renders chart + summary with thumbnails below", async () => {
    await app.submitQuery(
      "How has the trend of movie budgets changed over time for different genres?",
    );
    expect(chartSvg()).toBeTruthy();
    expect(document.querySelectorAll("polyline.series").length).toBeGreaterThan(1);
    const summary = document.querySelector("#summary-text")!.textContent!;
    expect(summary.length).toBeGreaterThan(20);
    expect(thumbs().length).toBeGreaterThan(0);
  });

  it("geographic question renders a choropleth with region shapes", async () => {
    await app.submitQuery("housing prices usa");
    const svg = chartSvg();
    expect(svg).toBeTruthy();
    const regions = document.querySelectorAll("#qa-panel rect.region");
    expect(regions.length).toBeGreaterThan(10);
    expect(
      document.querySelector('#qa-panel rect.region[data-region="Washington"]'),
    ).toBeTruthy();
  });

  it("keyword search shows thumbnails only", async () => {
    await app.submitQuery("elections");
    expect(document.querySelector("#qa-panel")).toBeNull();
    const hits = thumbs();
    expect(hits.length).toBeGreaterThan(0);
    for (const thumb of hits) {
      expect(thumb.getAttribute("href")).toMatch(/^https?:/);
      expect(thumb.textContent!.trim().length).toBeGreaterThan(0);
    }
  });

  it("design search ranks treemaps first without a generated chart", async () => {
    await app.submitQuery("treemap stocks");
    expect(document.querySelector("#qa-panel")).toBeNull();
    const hits = thumbs();
    expect(hits.length).toBeGreaterThan(0);
    let seenNonTreemap = false;
    for (const thumb of hits) {
      const types = (thumb.getAttribute("data-chart-types") ?? "").split(" ");
      if (types.includes("treemap")) {
        expect(seenNonTreemap).toBe(false);
      } else {
        seenNonTreemap = true;
      }
    }
    expect(
      (hits[0]!.getAttribute("data-chart-types") ?? "").includes("treemap"),
    ).toBe(true);
  });

  it("chart-type facet and date range refine the grid without clearing the chart", async () => {
    await app.submitQuery(
      "How has the trend of movie budgets changed over time for different genres?",
    );
    expect(chartSvg()).toBeTruthy();

    await app.toggleFacet("chartTypes", "line");
    expect(chartSvg()).toBeTruthy(); // generated chart survives filtering
    let hits = thumbs();
    expect(hits.length).toBeGreaterThan(0);
    for (const thumb of hits) {
      expect(thumb.getAttribute("data-chart-types")).toContain("line");
    }

    await app.setDateRange("2020-01", "2021-12");
    expect(chartSvg()).toBeTruthy();
    hits = thumbs();
    for (const thumb of hits) {
      const created = thumb.textContent!.match(/\d{4}-\d{2}-\d{2}/)?.[0] ?? "";
      expect(created >= "2020-01-01" && created <= "2021-12-31").toBe(true);
    }

    // widening back out restores results
    await app.clearFacets();
    expect(thumbs().length).toBeGreaterThanOrEqual(hits.length);
    expect(chartSvg()).toBeTruthy();
  });

  it("switching the matched data source re-renders the chart, not the grid", async () => {
    await app.submitQuery("sales by region");
    expect(chartSvg()).toBeTruthy();
    const select = document.querySelector<HTMLSelectElement>("#source-select")!;
    expect(select.value).toBe("sales");
    expect(select.textContent).toContain("%");
    const gridBefore = thumbs().map((t) => t.getAttribute("data-id"));
    const titleBefore = chartSvg()!.getAttribute("aria-label");

    await app.switchSource("coffee");
    const titleAfter = document
      .querySelector("#qa-panel #chart-container svg")
      ?.getAttribute("aria-label");
    expect(titleAfter).not.toBe(titleBefore);
    expect(thumbs().map((t) => t.getAttribute("data-id"))).toEqual(gridBefore);
  });

  it("data-source hover shows metadata and then serves it from cache", async () => {
    const card = document.querySelector('.ds-card[data-source-id="housing"]')!;
    await app.showTooltip(card, "housing");
    const tooltip = card.querySelector<HTMLElement>(".ds-tooltip")!;
    expect(tooltip.hidden).toBe(false);
    expect(tooltip.textContent).toContain("State");
    expect(app.api.hasCachedDetail("housing")).toBe(true);
    await app.showTooltip(card, "nope-nope");
    const bad = document.querySelector('.ds-card[data-source-id="housing"]')!
      .querySelector(".ds-tooltip")!;
    expect(bad.textContent).toContain("metadata unavailable");
  });

  it("empty submissions issue no request and failures keep prior results", async () => {
    await app.submitQuery("elections");
    const before = thumbs().length;
    await app.submitQuery("   ");
    expect(thumbs().length).toBe(before);

    // point the client at a dead port: banner appears, results retained
    app.api.base = "http://127.0.0.1:9";
    await app.submitQuery("anything else");
    expect(document.querySelector("#error-banner")).toBeTruthy();
    expect(thumbs().length).toBe(before);
  });
});
