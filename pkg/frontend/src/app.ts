// Controller: wires DOM events to state transitions and API calls, and
// re-renders the affected regions. All state changes flow through the pure
// functions in state.ts; this file owns the side effects.

import { ApiClient } from "./api.js";
import { debounce } from "./debounce.js";
import {
  renderBanner,
  renderDataSourceTooltip,
  renderLanding,
  renderResults,
  renderSearchBox,
  renderTooltipUnavailable,
} from "./render.js";
import {
  dateRangeSet,
  facetResultArrived,
  facetToggled,
  initialState,
  queryFailed,
  queryStarted,
  querySucceeded,
  sourceResultArrived,
  sourceSwitched,
  type ViewState,
} from "./state.js";
import type { DataSourceSummary, GeometrySet, VizHit } from "./types.js";
import { facetsAreEmpty } from "./types.js";

const SUGGEST_DEBOUNCE_MS = 400;

export class App {
  state: ViewState = initialState();
  private sources: DataSourceSummary[] = [];
  private sample: VizHit[] = [];
  private placeholder = "sum of Sales by Region";
  private geometry: GeometrySet | null = null;

  constructor(
    private root: HTMLElement,
    public api: ApiClient,
  ) {}

  async init(): Promise<void> {
    try {
      [this.sources, this.sample] = await Promise.all([
        this.api.dataSources(),
        this.api.vizSample(12),
      ]);
      const first = this.sources[0];
      if (first) {
        const detail = await this.api.dataSourceDetail(first.id);
        if (detail.suggestedQuery) this.placeholder = detail.suggestedQuery;
      }
    } catch {
      // the landing page degrades to an empty strip; search still works
    }
    this.render();
  }

  // -- interactions --------------------------------------------------------

  async submitQuery(query: string): Promise<void> {
    const trimmed = query.trim();
    if (!trimmed) return; // guarded input: empty submissions issue no request
    this.state = queryStarted(this.state, trimmed);
    const seq = this.state.seq;
    this.render();
    try {
      const result = await this.api.search(trimmed);
      await this.ensureGeometry(result.qa?.chartSpec?.geo?.geometrySet ?? null);
      this.state = querySucceeded(this.state, seq, result);
    } catch (error) {
      this.state = queryFailed(this.state, seq, describe(error));
    }
    this.render();
  }

  async toggleFacet(kind: "authors" | "chartTypes", value: string): Promise<void> {
    if (!this.state.lastResult) return;
    this.state = facetToggled(this.state, kind, value);
    await this.refreshGeneral();
  }

  async setDateRange(from: string | null, to: string | null): Promise<void> {
    if (!this.state.lastResult) return;
    this.state = dateRangeSet(this.state, from, to);
    await this.refreshGeneral();
  }

  async clearFacets(): Promise<void> {
    if (!this.state.lastResult || facetsAreEmpty(this.state.facets)) return;
    this.state = dateRangeSet(
      { ...this.state, facets: { authors: new Set(), chartTypes: new Set(), from: null, to: null } },
      null,
      null,
    );
    await this.refreshGeneral();
  }

  private async refreshGeneral(): Promise<void> {
    const seq = this.state.seq;
    this.render();
    try {
      const result = await this.api.search(this.state.query, this.state.facets);
      this.state = facetResultArrived(this.state, seq, result);
    } catch (error) {
      this.state = queryFailed(this.state, seq, describe(error));
    }
    this.render();
  }

  async switchSource(sourceId: string): Promise<void> {
    if (!this.state.lastResult?.qa) return;
    this.state = sourceSwitched(this.state, sourceId);
    const seq = this.state.seq;
    this.render();
    try {
      const result = await this.api.search(this.state.query, undefined, sourceId);
      await this.ensureGeometry(result.qa?.chartSpec?.geo?.geometrySet ?? null);
      this.state = sourceResultArrived(this.state, seq, result);
    } catch (error) {
      this.state = queryFailed(this.state, seq, describe(error));
    }
    this.render();
  }

  async showTooltip(card: Element, sourceId: string): Promise<void> {
    const tooltip = card.querySelector<HTMLElement>(".ds-tooltip");
    if (!tooltip) return;
    tooltip.hidden = false;
    try {
      const detail = await this.api.dataSourceDetail(sourceId);
      tooltip.innerHTML = renderDataSourceTooltip(detail);
    } catch {
      tooltip.innerHTML = renderTooltipUnavailable();
    }
  }

  // -- rendering -----------------------------------------------------------

  private async ensureGeometry(set: string | null): Promise<void> {
    if (!set || this.geometry?.set === set) return;
    try {
      this.geometry = await this.api.geometry(set);
    } catch {
      this.geometry = null;
    }
  }

  render(): void {
    const body = this.state.lastResult
      ? renderResults(this.state, this.geometry)
      : renderLanding(this.sources, this.sample);
    this.root.innerHTML = `
      <header><h1>data repository search</h1>
        ${renderSearchBox(this.placeholder, this.state.query)}
        ${renderBanner(this.state)}
      </header>
      <main>${body}</main>`;
    this.attach();
  }

  private attach(): void {
    const form = this.root.querySelector<HTMLFormElement>("#search-form");
    const input = this.root.querySelector<HTMLInputElement>("#search-input");
    form?.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submitQuery(input?.value ?? "");
    });
    input?.addEventListener("input", () => {
      this.suggestLater(input.value);
    });

    for (const card of this.root.querySelectorAll(".ds-card")) {
      const id = card.getAttribute("data-source-id");
      if (!id) continue;
      card.addEventListener("mouseenter", () => void this.showTooltip(card, id));
      card.addEventListener("focus", () => void this.showTooltip(card, id));
      card.addEventListener("mouseleave", () => {
        const tooltip = card.querySelector<HTMLElement>(".ds-tooltip");
        if (tooltip) tooltip.hidden = true;
      });
    }
    const qaIcon = this.root.querySelector("#qa-ds-icon");
    qaIcon?.addEventListener("mouseenter", () => {
      const holder = qaIcon.closest(".source-pick");
      const id = this.state.lastResult?.qa?.sourceId;
      if (holder && id) void this.showTooltip(holder, id);
    });

    for (const box of this.root.querySelectorAll<HTMLInputElement>(
      "#facet-panel input[type=checkbox]",
    )) {
      box.addEventListener("change", () => {
        const kind = box.getAttribute("data-facet-kind") as "authors" | "chartTypes";
        const value = box.getAttribute("data-value");
        if (kind && value) void this.toggleFacet(kind, value);
      });
    }
    this.root.querySelector("#date-apply")?.addEventListener("click", () => {
      const from = this.root.querySelector<HTMLInputElement>("#date-from")?.value || null;
      const to = this.root.querySelector<HTMLInputElement>("#date-to")?.value || null;
      void this.setDateRange(from, to);
    });
    this.root.querySelector("#facet-clear")?.addEventListener("click", () => {
      void this.clearFacets();
    });

    this.root
      .querySelector<HTMLSelectElement>("#source-select")
      ?.addEventListener("change", (event) => {
        const select = event.target as HTMLSelectElement;
        void this.switchSource(select.value);
      });

    for (const button of this.root.querySelectorAll<HTMLButtonElement>(".suggestion")) {
      button.addEventListener("click", () => {
        const query = button.getAttribute("data-query");
        if (query) void this.submitQuery(query);
      });
    }
  }

  private suggestLater = debounce((prefix: string) => {
    void this.fillSuggestions(prefix);
  }, SUGGEST_DEBOUNCE_MS);

  private async fillSuggestions(prefix: string): Promise<void> {
    try {
      const suggestions = await this.api.suggest(prefix);
      const list = this.root.querySelector("#suggestion-list");
      if (list) {
        list.innerHTML = suggestions
          .map((s) => `<option value="${s.replace(/"/g, "&quot;")}"></option>`)
          .join("");
      }
    } catch {
      // suggestions are best-effort
    }
  }
}

function describe(error: unknown): string {
  if (error instanceof Error) return error.message;
  return String(error);
}

export function createApp(root: HTMLElement, baseUrl = ""): App {
  return new App(root, new ApiClient(baseUrl));
}
