// Protocol payloads, mirroring the gamecol service JSON exactly.

export type Player = 'alice' | 'bob';

export interface MoveRecord {
  ply: number;
  player: Player;
  vertex: number;
  shade: number | null;
  annotations: Record<string, unknown> | null;
}

export interface GraphPayload {
  n: number;
  edges: [number, number][];
  labels?: [number, number][];
}

export interface SessionPayload {
  id: string;
  mode: 'coloring' | 'marking' | 'bob-marking';
  shades: number | null;
  human: Player;
  policy: string;
  first: Player;
  status: 'awaiting-human' | 'awaiting-engine' | 'finished';
  to_move: Player | null;
  winner: Player | null;
  score: number | null;
  graph: GraphPayload;
  graph6: string;
  history: MoveRecord[];
  assignment?: (number | null)[];
  marks?: (Player | null)[];
  max_score?: number;
  k?: number;
  per_color?: number;
}

export interface VirtualGamePayload {
  pair: [number, number];
  vertices: number[];
  edges: [number, number][];
  red: number[];
  blue: number[];
}

export interface InternalsPayload {
  available: boolean;
  games: VirtualGamePayload[];
  k?: number;
  per_color?: number;
  t?: number;
  reactive?: boolean;
  base_colors?: number[];
}

export interface MoveResponse {
  state: SessionPayload;
  human_move: MoveRecord;
  engine_move: MoveRecord | null;
}
