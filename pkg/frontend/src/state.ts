// View state and its pure transition functions.
//
// Every transition is (previous state, event) -> next state with no I/O, so
// the whole interaction loop is testable against recorded responses. Requests
// carry a sequence number; a response only applies when its sequence is still
// the latest for its kind (last-write-wins for superseded interactions).

import type { FacetSelection, HybridResult } from "./types.js";
import { emptyFacets } from "./types.js";

export interface ViewState {
  query: string;
  lastResult: HybridResult | null;
  facets: FacetSelection;
  selectedSourceId: string | null;
  loading: boolean;
  error: string | null;
  seq: number; // latest issued request
}

export function initialState(): ViewState {
  return {
    query: "",
    lastResult: null,
    facets: emptyFacets(),
    selectedSourceId: null,
    loading: false,
    error: null,
    seq: 0,
  };
}

function cloneFacets(f: FacetSelection): FacetSelection {
  return {
    authors: new Set(f.authors),
    chartTypes: new Set(f.chartTypes),
    from: f.from,
    to: f.to,
  };
}

export function queryStarted(state: ViewState, query: string): ViewState {
  return { ...state, query, loading: true, error: null, seq: state.seq + 1 };
}

export function querySucceeded(
  state: ViewState,
  seq: number,
  result: HybridResult,
): ViewState {
  if (seq !== state.seq) return state; // superseded
  return {
    ...state,
    lastResult: result,
    facets: emptyFacets(), // a fresh query resets the filters
    selectedSourceId: result.qa?.sourceId ?? null,
    loading: false,
    error: null,
  };
}

export function queryFailed(
  state: ViewState,
  seq: number,
  message: string,
): ViewState {
  if (seq !== state.seq) return state;
  // previous results are retained; only the banner changes
  return { ...state, loading: false, error: message };
}

export function facetToggled(
  state: ViewState,
  kind: "authors" | "chartTypes",
  value: string,
): ViewState {
  const facets = cloneFacets(state.facets);
  const bucket = facets[kind];
  if (bucket.has(value)) bucket.delete(value);
  else bucket.add(value);
  return { ...state, facets, seq: state.seq + 1, loading: true };
}

export function dateRangeSet(
  state: ViewState,
  from: string | null,
  to: string | null,
): ViewState {
  const facets = cloneFacets(state.facets);
  facets.from = from;
  facets.to = to;
  return { ...state, facets, seq: state.seq + 1, loading: true };
}

/** A facet refresh replaces only the general results: the generated chart
 * (qa) is never cleared by filtering. */
export function facetResultArrived(
  state: ViewState,
  seq: number,
  result: HybridResult,
): ViewState {
  if (seq !== state.seq) return state;
  if (!state.lastResult) {
    return { ...state, lastResult: result, loading: false };
  }
  return {
    ...state,
    lastResult: { ...state.lastResult, general: result.general },
    loading: false,
    error: null,
  };
}

export function sourceSwitched(state: ViewState, sourceId: string): ViewState {
  return {
    ...state,
    selectedSourceId: sourceId,
    seq: state.seq + 1,
    loading: true,
  };
}

/** A pinned-source response replaces only the qa block; the thumbnail grid
 * stays as it is. */
export function sourceResultArrived(
  state: ViewState,
  seq: number,
  result: HybridResult,
): ViewState {
  if (seq !== state.seq) return state;
  if (!state.lastResult) {
    return { ...state, lastResult: result, loading: false };
  }
  return {
    ...state,
    lastResult: { ...state.lastResult, qa: result.qa },
    loading: false,
    error: null,
  };
}
