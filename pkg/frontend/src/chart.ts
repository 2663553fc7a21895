// Declarative chart renderer: turns a ChartSpec (mark + channel encodings +
// data) into standalone SVG markup. The UI owns no analytics: every number
// drawn here came from the service's result table.

import type { ChartSpec, GeometrySet } from "./types.js";

const WIDTH = 560;
const HEIGHT = 320;
const MARGIN = { top: 28, right: 16, bottom: 48, left: 64 };
const PLOT_W = WIDTH - MARGIN.left - MARGIN.right;
const PLOT_H = HEIGHT - MARGIN.top - MARGIN.bottom;

const PALETTE = [
  "#4c78a8", "#f58518", "#54a24b", "#e45756",
  "#72b7b2", "#b279a2", "#eeca3b", "#9d755d",
];

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function formatValue(value: number, unit?: string): string {
  const text = Number.isInteger(value)
    ? String(value)
    : value.toFixed(2).replace(/0+$/, "").replace(/\.$/, "");
  return unit === "USD" ? `$${text}` : text;
}

function svgOpen(title: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${WIDTH} ${HEIGHT}" ` +
    `class="chart" role="img" aria-label="${escapeXml(title)}">` +
    `<text x="${WIDTH / 2}" y="18" text-anchor="middle" class="chart-title">` +
    `${escapeXml(title)}</text>`
  );
}

function linearScale(values: number[]): {
  min: number;
  max: number;
  to: (v: number, span: number) => number;
} {
  let min = Math.min(...values, 0);
  let max = Math.max(...values);
  if (min === max) {
    max = min + 1;
  }
  return { min, max, to: (v, span) => ((v - min) / (max - min)) * span };
}

function axisLabels(min: number, max: number, unit?: string): string {
  const y0 = MARGIN.top + PLOT_H;
  return (
    `<text x="${MARGIN.left - 6}" y="${y0}" text-anchor="end" class="axis">` +
    `${escapeXml(formatValue(min, unit))}</text>` +
    `<text x="${MARGIN.left - 6}" y="${MARGIN.top + 10}" text-anchor="end" class="axis">` +
    `${escapeXml(formatValue(max, unit))}</text>`
  );
}

function legend(series: string[]): string {
  if (series.length < 2) return "";
  const items = series
    .map((name, i) => {
      const x = MARGIN.left + i * 120;
      const color = PALETTE[i % PALETTE.length];
      return (
        `<rect x="${x}" y="${HEIGHT - 14}" width="10" height="10" fill="${color}"/>` +
        `<text x="${x + 14}" y="${HEIGHT - 5}" class="axis">${escapeXml(name)}</text>`
      );
    })
    .join("");
  return items;
}

function renderBar(spec: ChartSpec): string {
  const xField = spec.encodings.x?.field ?? null;
  const yField = spec.encodings.y?.field ?? "";
  const colorField = spec.encodings.color?.field ?? null;
  const unit = spec.units?.[yField];
  const categories = xField
    ? [...new Set(spec.data.map((d) => String(d[xField])))]
    : ["Total"];
  const series = colorField
    ? [...new Set(spec.data.map((d) => String(d[colorField])))]
    : [""];
  const values = spec.data.map((d) => Number(d[yField]));
  const scale = linearScale(values);

  const slot = PLOT_W / categories.length;
  const barWidth = Math.max(2, (slot * 0.8) / series.length);
  let bars = "";
  for (const row of spec.data) {
    const cat = xField ? String(row[xField]) : "Total";
    const serie = colorField ? String(row[colorField]) : "";
    const ci = categories.indexOf(cat);
    const si = series.indexOf(serie);
    const value = Number(row[yField]);
    const h = scale.to(value, PLOT_H);
    const x = MARGIN.left + ci * slot + slot * 0.1 + si * barWidth;
    const y = MARGIN.top + PLOT_H - h;
    const color = PALETTE[(colorField ? si : 0) % PALETTE.length];
    bars +=
      `<rect class="bar" data-category="${escapeXml(cat)}" x="${x.toFixed(1)}" ` +
      `y="${y.toFixed(1)}" width="${barWidth.toFixed(1)}" height="${h.toFixed(1)}" ` +
      `fill="${color}"><title>${escapeXml(`${cat}: ${formatValue(value, unit)}`)}</title></rect>`;
  }
  const labels = categories
    .map((cat, i) => {
      const x = MARGIN.left + i * slot + slot / 2;
      return (
        `<text x="${x.toFixed(1)}" y="${MARGIN.top + PLOT_H + 16}" ` +
        `text-anchor="middle" class="axis">${escapeXml(cat.slice(0, 12))}</text>`
      );
    })
    .join("");
  return bars + labels + axisLabels(scale.min, scale.max, unit) + legend(series.filter(Boolean));
}

function renderLine(spec: ChartSpec): string {
  const xField = spec.encodings.x?.field ?? "";
  const yField = spec.encodings.y?.field ?? "";
  const colorField = spec.encodings.color?.field ?? null;
  const unit = spec.units?.[yField];
  const xValues = [...new Set(spec.data.map((d) => String(d[xField])))].sort();
  const values = spec.data.map((d) => Number(d[yField]));
  const scale = linearScale(values);
  const step = xValues.length > 1 ? PLOT_W / (xValues.length - 1) : 0;

  const bySeries = new Map<string, { x: string; y: number }[]>();
  for (const row of spec.data) {
    const key = colorField ? String(row[colorField]) : "";
    if (!bySeries.has(key)) bySeries.set(key, []);
    bySeries.get(key)!.push({ x: String(row[xField]), y: Number(row[yField]) });
  }
  let lines = "";
  let si = 0;
  const seriesNames = [...bySeries.keys()].sort();
  for (const name of seriesNames) {
    const points = bySeries
      .get(name)!
      .sort((a, b) => (a.x < b.x ? -1 : a.x > b.x ? 1 : 0))
      .map((p) => {
        const xi = xValues.indexOf(p.x);
        const px = MARGIN.left + xi * step;
        const py = MARGIN.top + PLOT_H - scale.to(p.y, PLOT_H);
        return `${px.toFixed(1)},${py.toFixed(1)}`;
      })
      .join(" ");
    const color = PALETTE[si % PALETTE.length];
    lines +=
      `<polyline class="series" data-series="${escapeXml(name)}" fill="none" ` +
      `stroke="${color}" stroke-width="2" points="${points}"/>`;
    si += 1;
  }
  const first = xValues[0] ?? "";
  const last = xValues[xValues.length - 1] ?? "";
  const xLabels =
    `<text x="${MARGIN.left}" y="${MARGIN.top + PLOT_H + 16}" class="axis">` +
    `${escapeXml(first)}</text>` +
    `<text x="${MARGIN.left + PLOT_W}" y="${MARGIN.top + PLOT_H + 16}" ` +
    `text-anchor="end" class="axis">${escapeXml(last)}</text>`;
  return lines + xLabels + axisLabels(scale.min, scale.max, unit) + legend(seriesNames.filter(Boolean));
}

function renderPoint(spec: ChartSpec): string {
  const xField = spec.encodings.x?.field ?? "";
  const yField = spec.encodings.y?.field ?? "";
  const xs = spec.data.map((d) => Number(d[xField]));
  const ys = spec.data.map((d) => Number(d[yField]));
  const sx = linearScale(xs);
  const sy = linearScale(ys);
  const dots = spec.data
    .map((row) => {
      const px = MARGIN.left + sx.to(Number(row[xField]), PLOT_W);
      const py = MARGIN.top + PLOT_H - sy.to(Number(row[yField]), PLOT_H);
      return `<circle class="dot" cx="${px.toFixed(1)}" cy="${py.toFixed(1)}" r="3" fill="${PALETTE[0]}" fill-opacity="0.55"/>`;
    })
    .join("");
  const xAxis =
    `<text x="${MARGIN.left + PLOT_W / 2}" y="${HEIGHT - 6}" text-anchor="middle" class="axis">` +
    `${escapeXml(xField)}</text>`;
  const yAxis =
    `<text x="12" y="${MARGIN.top + PLOT_H / 2}" class="axis" ` +
    `transform="rotate(-90 12 ${MARGIN.top + PLOT_H / 2})" text-anchor="middle">` +
    `${escapeXml(yField)}</text>`;
  return dots + xAxis + yAxis + axisLabels(sy.min, sy.max, spec.units?.[yField]);
}

function colorRamp(t: number): string {
  // light -> dark blue
  const from = [222, 235, 247];
  const to = [33, 81, 156];
  const channel = (i: number) =>
    Math.round(from[i]! + (to[i]! - from[i]!) * Math.min(1, Math.max(0, t)));
  return `rgb(${channel(0)},${channel(1)},${channel(2)})`;
}

function renderGeo(spec: ChartSpec, geometry: GeometrySet | null): string {
  const regionField = spec.geo?.field ?? "";
  const valueField = spec.encodings.color?.field ?? "";
  const unit = spec.units?.[valueField];
  const values = spec.data.map((d) => Number(d[valueField]));
  const scale = linearScale(values);

  if (!geometry) {
    // no bundled geometry for this region set: value-tinted tile fallback
    const cols = 8;
    const size = Math.min(PLOT_W / cols, 52);
    const tiles = spec.data
      .map((row, i) => {
        const x = MARGIN.left + (i % cols) * size;
        const y = MARGIN.top + Math.floor(i / cols) * size;
        const value = Number(row[valueField]);
        const name = String(row[regionField]);
        return (
          `<g class="region" data-region="${escapeXml(name)}">` +
          `<rect x="${x}" y="${y}" width="${size - 3}" height="${size - 3}" ` +
          `fill="${colorRamp(scale.to(value, 1))}" stroke="#fff"/>` +
          `<text x="${x + 3}" y="${y + 12}" class="axis">${escapeXml(name.slice(0, 6))}</text>` +
          `<title>${escapeXml(`${name}: ${formatValue(value, unit)}`)}</title></g>`
        );
      })
      .join("");
    return tiles;
  }

  const boxes = Object.values(geometry.regions);
  const lons = boxes.flatMap((b) => [b[0], b[2]]);
  const lats = boxes.flatMap((b) => [b[1], b[3]]);
  const lonMin = Math.min(...lons);
  const lonMax = Math.max(...lons);
  const latMin = Math.min(...lats);
  const latMax = Math.max(...lats);
  const px = (lon: number) =>
    MARGIN.left + ((lon - lonMin) / (lonMax - lonMin)) * PLOT_W;
  const py = (lat: number) =>
    MARGIN.top + PLOT_H - ((lat - latMin) / (latMax - latMin)) * PLOT_H;

  const byRegion = new Map(
    spec.data.map((row) => [String(row[regionField]), Number(row[valueField])]),
  );
  const shapes = Object.entries(geometry.regions)
    .map(([name, box]) => {
      const value = byRegion.get(name);
      const fill =
        value === undefined ? "#f0f0f0" : colorRamp(scale.to(value, 1));
      const x1 = px(box[0]);
      const y1 = py(box[3]);
      const width = Math.max(1, px(box[2]) - x1);
      const height = Math.max(1, py(box[1]) - y1);
      const label =
        value === undefined ? name : `${name}: ${formatValue(value, unit)}`;
      return (
        `<rect class="region" data-region="${escapeXml(name)}" x="${x1.toFixed(1)}" ` +
        `y="${y1.toFixed(1)}" width="${width.toFixed(1)}" height="${height.toFixed(1)}" ` +
        `fill="${fill}" stroke="#fff" stroke-width="0.5">` +
        `<title>${escapeXml(label)}</title></rect>`
      );
    })
    .join("");
  return shapes + axisLabels(scale.min, scale.max, unit);
}

export function renderChart(
  spec: ChartSpec,
  geometry: GeometrySet | null = null,
): string {
  let body: string;
  switch (spec.mark) {
    case "bar":
      body = renderBar(spec);
      break;
    case "line":
      body = renderLine(spec);
      break;
    case "point":
      body = renderPoint(spec);
      break;
    case "geoshape":
      body = renderGeo(spec, geometry);
      break;
    default:
      body = `<text x="${WIDTH / 2}" y="${HEIGHT / 2}" text-anchor="middle">unsupported mark</text>`;
  }
  return `${svgOpen(spec.title)}${body}</svg>`;
}
