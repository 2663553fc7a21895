// Wire types for the search service API.

export interface Thresholds {
  fieldMatch: number;
  normMatch: number;
}

export interface SourceScore {
  sourceId: string;
  fieldMatchCount: number;
  rawScore: number;
  normScore: number;
}

export interface Plan {
  hasAnalyticalIntent: boolean;
  hasDSMatch: boolean;
  invokeQA: boolean;
  thresholds: Thresholds;
  rankedSources: SourceScore[];
}

export interface ChannelEncoding {
  field: string;
  type: string;
  aggregate?: string;
}

export interface ChartSpec {
  version: number;
  mark: "bar" | "line" | "point" | "geoshape";
  encodings: Partial<Record<"x" | "y" | "color", ChannelEncoding>>;
  data: Record<string, string | number>[];
  title: string;
  units?: Record<string, string>;
  geo?: { field: string; geometrySet: string | null };
}

export interface SourceRankEntry {
  sourceId: string;
  sourceName: string;
  percentage: number;
  fieldMatchCount: number;
}

export interface QaResult {
  sourceId: string;
  sourceName: string;
  sourceRanking: SourceRankEntry[];
  chartSpec?: ChartSpec;
  summaryText?: string;
  summaryWarning?: string;
  suggestions?: string[];
  error?: string;
}

export interface VizHit {
  id: string;
  title: string;
  authorName: string;
  createdDate: string;
  chartTypes: string[];
  markTypes?: string[];
  sourceUrl: string;
  thumbnailRef: string;
  caption?: string;
  tags?: string[];
  score?: number; // absent on the landing-page sample
  normScore?: number;
}

export interface FacetSummary {
  authorCounts: Record<string, number>;
  chartTypeCounts: Record<string, number>;
  dateHistogram: Record<string, number>;
}

export interface GeneralResult {
  results: VizHit[];
  facets: FacetSummary;
}

export interface HybridResult {
  plan: Plan;
  qa?: QaResult;
  general: GeneralResult;
  timings: Record<string, number>;
}

export interface AttributeDetail {
  name: string;
  dataType: string;
  role: string;
  synonyms?: string[];
  relatedTerms?: string[];
  unitSemantics?: string;
}

export interface DataSourceSummary {
  id: string;
  name: string;
  description: string;
  rowCount: number;
  attributes: { name: string; dataType: string; role: string }[];
}

export interface DataSourceDetail {
  id: string;
  name: string;
  description: string;
  defaultAggregate: string;
  rowCount: number;
  attributes: AttributeDetail[];
  sampleValues: Record<string, string[]>;
  suggestedQuery?: string;
}

export interface GeometrySet {
  set: string;
  projection: string;
  regions: Record<string, [number, number, number, number]>;
}

export interface FacetSelection {
  authors: Set<string>;
  chartTypes: Set<string>;
  from: string | null; // YYYY-MM
  to: string | null;
}

export function emptyFacets(): FacetSelection {
  return { authors: new Set(), chartTypes: new Set(), from: null, to: null };
}

export function facetsAreEmpty(f: FacetSelection): boolean {
  return f.authors.size === 0 && f.chartTypes.size === 0 && !f.from && !f.to;
}
