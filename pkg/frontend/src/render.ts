// DOM rendering for the two views: the landing page (search box with a
// suggested placeholder, data-source previews with metadata tooltips, a
// sampling of pre-authored charts) and the hybrid result page (generated
// chart + summary above the thumbnail grid, scented facet widgets on the
// side). Pure string templating; handlers are attached by the controller.

import { escapeXml, formatValue, renderChart } from "./chart.js";
import type { ViewState } from "./state.js";
import type {
  DataSourceDetail,
  DataSourceSummary,
  FacetSummary,
  GeometrySet,
  QaResult,
  VizHit,
} from "./types.js";

const esc = escapeXml;

const MARK_GLYPHS: Record<string, string> = {
  bar: "▌▆▂", line: "⟋", scatterplot: "∴", map: "◱", treemap: "▦",
  heatmap: "▩", pie: "◕", histogram: "▂▆▌", area: "◢", sankey: "≋",
  boxplot: "┝┥", sunburst: "◉", gantt: "≡", network: "◦-◦",
};

export function renderSearchBox(placeholder: string, query: string): string {
  return `
    <form id="search-form" autocomplete="off">
      <input id="search-input" type="search" list="suggestion-list"
             placeholder="${esc(placeholder)}" value="${esc(query)}" />
      <datalist id="suggestion-list"></datalist>
      <button type="submit" id="search-button">Search</button>
    </form>`;
}

export function renderDataSourceCards(sources: DataSourceSummary[]): string {
  const cards = sources
    .map(
      (s) => `
      <div class="ds-card" data-source-id="${esc(s.id)}" tabindex="0">
        <span class="ds-icon">🗄</span>
        <strong>${esc(s.name)}</strong>
        <span class="ds-meta">${s.attributes.length} fields · ${s.rowCount} rows</span>
        <div class="ds-tooltip" hidden></div>
      </div>`,
    )
    .join("");
  return `<section id="ds-strip"><h2>Ask the data</h2>
    <div class="ds-cards">${cards}</div></section>`;
}

export function renderDataSourceTooltip(detail: DataSourceDetail): string {
  const rows = detail.attributes
    .map((a) => {
      const samples = (detail.sampleValues[a.name] ?? []).slice(0, 5).join(", ");
      return `<tr><td>${esc(a.name)}</td><td>${esc(a.dataType)}</td>
        <td class="samples">${esc(samples)}</td></tr>`;
    })
    .join("");
  return `<p>${esc(detail.description)}</p>
    <table><thead><tr><th>field</th><th>type</th><th>values</th></tr></thead>
    <tbody>${rows}</tbody></table>`;
}

export function renderTooltipUnavailable(): string {
  return `<p class="muted">metadata unavailable</p>`;
}

export function renderThumb(hit: VizHit): string {
  const glyphs = hit.chartTypes
    .map((t) => MARK_GLYPHS[t] ?? "▢")
    .join(" ");
  return `
    <a class="thumb" href="${esc(hit.sourceUrl)}" target="_blank" rel="noopener"
       data-id="${esc(hit.id)}" data-chart-types="${esc(hit.chartTypes.join(" "))}">
      <div class="thumb-art" aria-hidden="true">${esc(glyphs)}</div>
      <div class="thumb-title">${esc(hit.title)}</div>
      <div class="thumb-meta">${esc(hit.authorName)} · ${esc(hit.createdDate)}</div>
    </a>`;
}

function facetGroup(
  title: string,
  kind: string,
  counts: Record<string, number>,
  selected: Set<string>,
): string {
  const entries = Object.entries(counts).sort(
    (a, b) => b[1] - a[1] || a[0].localeCompare(b[0]),
  );
  const max = entries.length ? entries[0]![1] : 1;
  const rows = entries
    .slice(0, 12)
    .map(([value, count]) => {
      const width = Math.max(4, Math.round((count / max) * 90));
      const checked = selected.has(value) ? "checked" : "";
      return `
      <label class="facet-row">
        <input type="checkbox" data-facet-kind="${kind}" data-value="${esc(value)}" ${checked}/>
        <span class="facet-label">${esc(value)}</span>
        <span class="facet-bar" style="width:${width}px"></span>
        <span class="facet-count">${count}</span>
      </label>`;
    })
    .join("");
  return `<fieldset class="facet-group" id="facet-${kind}">
    <legend>${esc(title)}</legend>${rows}</fieldset>`;
}

export function renderFacetPanel(
  facets: FacetSummary,
  state: ViewState,
): string {
  const histogram = Object.entries(facets.dateHistogram).sort();
  const months = histogram.map(([m]) => m);
  const first = months[0] ?? "";
  const last = months[months.length - 1] ?? "";
  return `
  <aside id="facet-panel">
    ${facetGroup("Author", "authors", facets.authorCounts, state.facets.authors)}
    ${facetGroup("Chart type", "chartTypes", facets.chartTypeCounts, state.facets.chartTypes)}
    <fieldset class="facet-group" id="facet-dates">
      <legend>Created</legend>
      <div class="date-inputs">
        <input id="date-from" type="month" value="${esc(state.facets.from ?? "")}"
               min="${esc(first)}" max="${esc(last)}" aria-label="from month"/>
        <input id="date-to" type="month" value="${esc(state.facets.to ?? "")}"
               min="${esc(first)}" max="${esc(last)}" aria-label="to month"/>
        <button id="date-apply" type="button">Apply</button>
        <button id="facet-clear" type="button">Clear</button>
      </div>
    </fieldset>
  </aside>`;
}

export function renderSourceDropdown(qa: QaResult, selected: string | null): string {
  if (qa.sourceRanking.length === 0) return "";
  const options = qa.sourceRanking
    .map((entry) => {
      const chosen = entry.sourceId === (selected ?? qa.sourceId) ? "selected" : "";
      return `<option value="${esc(entry.sourceId)}" ${chosen}>
        ${esc(entry.sourceName)} (${entry.percentage}%)</option>`;
    })
    .join("");
  const disabled = qa.sourceRanking.length < 2 ? "disabled" : "";
  return `<label class="source-pick"><span class="ds-icon" id="qa-ds-icon" tabindex="0">🗄</span>
    <select id="source-select" ${disabled}>${options}</select>
    <div class="ds-tooltip" hidden></div></label>`;
}

export function renderQaPanel(
  qa: QaResult | undefined,
  selectedSourceId: string | null,
  geometry: GeometrySet | null,
): string {
  if (!qa) return "";
  if (!qa.chartSpec) {
    const items = (qa.suggestions ?? [])
      .map((s) => `<li><button class="suggestion" data-query="${esc(s)}">${esc(s)}</button></li>`)
      .join("");
    return `
    <section id="qa-panel" class="qa-suggestions">
      <div class="qa-head">Matched data source: <strong>${esc(qa.sourceName)}</strong>
        ${renderSourceDropdown(qa, selectedSourceId)}</div>
      <p>That question didn't resolve against the fields of this data source.
         Try one of these:</p>
      <ul id="qa-suggestion-list">${items}</ul>
    </section>`;
  }
  const summary = (qa.summaryText ?? "")
    .split("\n")
    .map((line) => `<p>${esc(line)}</p>`)
    .join("");
  const warning = qa.summaryWarning
    ? `<p class="muted small">${esc(qa.summaryWarning)}</p>`
    : "";
  return `
  <section id="qa-panel">
    <div class="qa-head">Answered from: <strong>${esc(qa.sourceName)}</strong>
      ${renderSourceDropdown(qa, selectedSourceId)}</div>
    <div class="qa-body">
      <div id="summary-text">${summary}${warning}</div>
      <div id="chart-container">${renderChart(qa.chartSpec, geometry)}</div>
    </div>
  </section>`;
}

export function renderResults(
  state: ViewState,
  geometry: GeometrySet | null,
): string {
  const result = state.lastResult;
  if (!result) return "";
  const thumbs = result.general.results.map(renderThumb).join("");
  const grid = `
    <section id="general-panel">
      <h2>Pre-authored visualizations <span class="muted">(${result.general.results.length})</span></h2>
      <div id="thumbnail-grid">${thumbs ||
        '<p class="muted">No matching visualizations.</p>'}</div>
    </section>`;
  return `
    ${renderQaPanel(result.qa, state.selectedSourceId, geometry)}
    <div class="results-row">
      ${grid}
      ${renderFacetPanel(result.general.facets, state)}
    </div>`;
}

export function renderLanding(
  sources: DataSourceSummary[],
  sample: VizHit[],
): string {
  const thumbs = sample.map(renderThumb).join("");
  return `
    ${renderDataSourceCards(sources)}
    <section id="viz-sample"><h2>Browse pre-authored visualizations</h2>
      <div id="thumbnail-grid">${thumbs}</div></section>`;
}

export function renderBanner(state: ViewState): string {
  const error = state.error
    ? `<div id="error-banner" role="alert">${esc(state.error)}</div>`
    : "";
  const loading = state.loading
    ? `<div id="loading-indicator" class="muted">searching…</div>`
    : "";
  return error + loading;
}
