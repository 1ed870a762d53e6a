// Pure view models.  Every function here is deterministic and side-effect
// free: the board is a function of the latest service payloads, so replaying
// a recorded payload log reproduces the view model exactly.

import type {
  InternalsPayload,
  MoveRecord,
  Player,
  SessionPayload,
} from './types';

export interface Point {
  x: number;
  y: number;
}

export interface PaletteShade {
  shade: number;
  color: number;
  brightness: number; // 0..1 within its color block
}

export interface BoardModel {
  sessionId: string;
  mode: SessionPayload['mode'];
  status: SessionPayload['status'];
  toMove: Player | null;
  human: Player;
  winner: Player | null;
  score: number | null;
  n: number;
  edges: [number, number][];
  positions: Point[];
  // per-vertex shade (coloring) or marker (marking); null = untouched
  cells: (number | Player | null)[];
  shades: number | null;
  palette: PaletteShade[][]; // grouped by color block
  lastHuman: MoveRecord | null;
  lastEngine: MoveRecord | null;
  plies: number;
}

export interface MiniBoard {
  pair: [number, number];
  vertices: number[];
  edges: [number, number][];
  red: number[];
  blue: number[];
}

export interface InternalsModel {
  available: boolean;
  expectedCount: number | null; // C(k,2) when k is known
  boards: MiniBoard[];
}

// -- palette ------------------------------------------------------------------

/** Group s shades into k blocks of perColor, each block one hue with
 * brightness steps, making "shades of a color" visually literal. */
export function paletteBlocks(
  shades: number,
  k: number | undefined,
  perColor: number | undefined,
): PaletteShade[][] {
  const kk = k && perColor && k * perColor === shades ? k : 1;
  const per = kk === 1 ? shades : (perColor as number);
  const blocks: PaletteShade[][] = [];
  for (let c = 0; c < kk; c++) {
    const block: PaletteShade[] = [];
    for (let i = 0; i < per; i++) {
      block.push({
        shade: c * per + i,
        color: c,
        brightness: per === 1 ? 0.5 : i / (per - 1),
      });
    }
    blocks.push(block);
  }
  return blocks;
}

// -- layout ---------------------------------------------------------------------

function circlePositions(n: number): Point[] {
  const pts: Point[] = [];
  for (let v = 0; v < n; v++) {
    const angle = (2 * Math.PI * v) / n - Math.PI / 2;
    pts.push({ x: Math.cos(angle), y: Math.sin(angle) });
  }
  return pts;
}

function gridPositions(labels: [number, number][]): Point[] {
  const maxU = Math.max(...labels.map((l) => l[0]));
  const maxV = Math.max(...labels.map((l) => l[1]));
  return labels.map(([u, v]) => ({
    x: maxV === 0 ? 0 : (2 * v) / maxV - 1,
    y: maxU === 0 ? 0 : (2 * u) / maxU - 1,
  }));
}

function isStar(n: number, edges: [number, number][]): number {
  // returns the center vertex id, or -1
  if (edges.length !== n - 1 || n < 3) return -1;
  const deg = new Array(n).fill(0);
  for (const [u, v] of edges) {
    deg[u]++;
    deg[v]++;
  }
  const center = deg.findIndex((d) => d === n - 1);
  return center >= 0 && deg.every((d, i) => i === center || d === 1)
    ? center
    : -1;
}

/** Deterministic force relaxation from a circle start; pure, fixed steps. */
export function forceLayout(
  n: number,
  edges: [number, number][],
  steps = 120,
): Point[] {
  const pos = circlePositions(n);
  if (n <= 2) return pos;
  for (let it = 0; it < steps; it++) {
    const fx = new Array(n).fill(0);
    const fy = new Array(n).fill(0);
    for (let a = 0; a < n; a++) {
      for (let b = a + 1; b < n; b++) {
        const dx = pos[a].x - pos[b].x;
        const dy = pos[a].y - pos[b].y;
        const d2 = Math.max(dx * dx + dy * dy, 1e-4);
        const rep = 0.08 / d2;
        fx[a] += dx * rep;
        fy[a] += dy * rep;
        fx[b] -= dx * rep;
        fy[b] -= dy * rep;
      }
    }
    for (const [u, v] of edges) {
      const dx = pos[u].x - pos[v].x;
      const dy = pos[u].y - pos[v].y;
      const att = 0.12;
      fx[u] -= dx * att;
      fy[u] -= dy * att;
      fx[v] += dx * att;
      fy[v] += dy * att;
    }
    const cool = 1 - it / steps;
    for (let v = 0; v < n; v++) {
      pos[v] = { x: pos[v].x + fx[v] * 0.3 * cool, y: pos[v].y + fy[v] * 0.3 * cool };
    }
  }
  // normalize into [-1, 1]
  const span = Math.max(
    1e-9,
    ...pos.map((p) => Math.max(Math.abs(p.x), Math.abs(p.y))),
  );
  return pos.map((p) => ({ x: p.x / span, y: p.y / span }));
}

export function layoutPositions(graph: {
  n: number;
  edges: [number, number][];
  labels?: [number, number][];
}): Point[] {
  const { n, edges, labels } = graph;
  if (labels && labels.length === n) return gridPositions(labels);
  if (n >= 3 && edges.length === n) {
    // maybe a cycle: all degrees 2 and connected is close enough for layout
    const deg = new Array(n).fill(0);
    for (const [u, v] of edges) {
      deg[u]++;
      deg[v]++;
    }
    if (deg.every((d) => d === 2)) return circlePositions(n);
  }
  const center = isStar(n, edges);
  if (center >= 0) {
    const ring = circlePositions(n - 1);
    const pts: Point[] = [];
    let i = 0;
    for (let v = 0; v < n; v++) {
      pts.push(v === center ? { x: 0, y: 0 } : ring[i++]);
    }
    return pts;
  }
  return forceLayout(n, edges);
}

// -- reducers ----------------------------------------------------------------------

/** Board model from one session payload; the previous model only supplies
 * the layout cache so positions stay stable between payloads. */
export function reduceSession(
  prev: BoardModel | null,
  payload: SessionPayload,
): BoardModel {
  const positions =
    prev && prev.sessionId === payload.id && prev.n === payload.graph.n
      ? prev.positions
      : layoutPositions(payload.graph);
  const cells: (number | Player | null)[] =
    payload.mode === 'coloring'
      ? (payload.assignment ?? []).slice()
      : (payload.marks ?? []).slice();
  const humanMoves = payload.history.filter((m) => m.player === payload.human);
  const engineMoves = payload.history.filter((m) => m.player !== payload.human);
  return {
    sessionId: payload.id,
    mode: payload.mode,
    status: payload.status,
    toMove: payload.to_move,
    human: payload.human,
    winner: payload.winner,
    score: payload.score,
    n: payload.graph.n,
    edges: payload.graph.edges,
    positions,
    cells,
    shades: payload.shades,
    palette:
      payload.mode === 'coloring' && payload.shades
        ? paletteBlocks(payload.shades, payload.k, payload.per_color)
        : [],
    lastHuman: humanMoves.length ? humanMoves[humanMoves.length - 1] : null,
    lastEngine: engineMoves.length ? engineMoves[engineMoves.length - 1] : null,
    plies: payload.history.length,
  };
}

export function reduceInternals(payload: InternalsPayload): InternalsModel {
  const boards = payload.games.map((g) => ({
    pair: g.pair,
    vertices: g.vertices,
    edges: g.edges,
    red: g.red,
    blue: g.blue,
  }));
  const k = payload.k;
  return {
    available: payload.available,
    expectedCount: k != null ? (k * (k - 1)) / 2 : null,
    boards,
  };
}

export interface LogEntry {
  kind: 'session' | 'internals';
  payload: SessionPayload | InternalsPayload;
}

/** Fold a recorded payload log into the final (board, internals) pair. */
export function replayLog(entries: LogEntry[]): {
  board: BoardModel | null;
  internals: InternalsModel | null;
} {
  let board: BoardModel | null = null;
  let internals: InternalsModel | null = null;
  for (const entry of entries) {
    if (entry.kind === 'session') {
      board = reduceSession(board, entry.payload as SessionPayload);
    } else {
      internals = reduceInternals(entry.payload as InternalsPayload);
    }
  }
  return { board, internals };
}

/** UX pre-validation only; the service remains the authority. */
export function locallyLegal(
  board: BoardModel,
  vertex: number,
  shade: number | null,
): boolean {
  if (board.status !== 'awaiting-human') return false;
  if (vertex < 0 || vertex >= board.n) return false;
  if (board.cells[vertex] !== null) return false;
  if (board.mode !== 'coloring') return true;
  if (shade == null || board.shades == null) return false;
  if (shade < 0 || shade >= board.shades) return false;
  return !board.edges.some(
    ([u, v]) =>
      (u === vertex && board.cells[v] === shade) ||
      (v === vertex && board.cells[u] === shade),
  );
}
