// Thin fetch client for the search service. Data-source details and region
// geometry are cached per session; everything else is request/response.

import type {
  DataSourceDetail,
  DataSourceSummary,
  FacetSelection,
  GeometrySet,
  HybridResult,
  VizHit,
} from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export function searchUrl(
  base: string,
  query: string,
  facets?: FacetSelection,
  sourceId?: string | null,
): string {
  const params = new URLSearchParams();
  params.set("q", query);
  if (facets) {
    for (const author of [...facets.authors].sort()) params.append("authors", author);
    for (const type of [...facets.chartTypes].sort()) params.append("chartTypes", type);
    if (facets.from) params.set("from", facets.from);
    if (facets.to) params.set("to", facets.to);
  }
  if (sourceId) params.set("source", sourceId);
  return `${base}/api/search?${params.toString()}`;
}

async function getJson<T>(url: string): Promise<T> {
  const response = await fetch(url);
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = await response.json();
      detail = body?.error?.message ?? detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  private detailCache = new Map<string, DataSourceDetail>();
  private geometryCache = new Map<string, GeometrySet>();

  constructor(public base: string = "") {}

  search(
    query: string,
    facets?: FacetSelection,
    sourceId?: string | null,
  ): Promise<HybridResult> {
    return getJson<HybridResult>(searchUrl(this.base, query, facets, sourceId));
  }

  dataSources(): Promise<DataSourceSummary[]> {
    return getJson<DataSourceSummary[]>(`${this.base}/api/datasources`);
  }

  async dataSourceDetail(id: string): Promise<DataSourceDetail> {
    const cached = this.detailCache.get(id);
    if (cached) return cached;
    const detail = await getJson<DataSourceDetail>(
      `${this.base}/api/datasources/${encodeURIComponent(id)}`,
    );
    this.detailCache.set(id, detail);
    return detail;
  }

  hasCachedDetail(id: string): boolean {
    return this.detailCache.has(id);
  }

  vizSample(n = 12): Promise<VizHit[]> {
    return getJson<VizHit[]>(`${this.base}/api/viz/sample?n=${n}`);
  }

  suggest(prefix: string, k = 8): Promise<string[]> {
    const params = new URLSearchParams({ q: prefix, k: String(k) });
    return getJson<string[]>(`${this.base}/api/suggest?${params.toString()}`);
  }

  async geometry(set: string): Promise<GeometrySet> {
    const cached = this.geometryCache.get(set);
    if (cached) return cached;
    const geometry = await getJson<GeometrySet>(
      `${this.base}/api/geometry/${encodeURIComponent(set)}`,
    );
    this.geometryCache.set(set, geometry);
    return geometry;
  }
}
