// View-model tests: replaying a recorded payload log reproduces the final
// board state exactly, and the reducers are pure functions of payloads.

import { readFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';
import { describe, expect, it } from 'vitest';

import {
  forceLayout,
  layoutPositions,
  locallyLegal,
  paletteBlocks,
  reduceInternals,
  reduceSession,
  replayLog,
  type LogEntry,
} from '../src/model';
import type { InternalsPayload, SessionPayload } from '../src/types';

const here = dirname(fileURLToPath(import.meta.url));
const log: LogEntry[] = JSON.parse(
  readFileSync(join(here, 'fixtures', 'c5_session_log.json'), 'utf8'),
);

const sessionPayloads = log
  .filter((e) => e.kind === 'session')
  .map((e) => e.payload as SessionPayload);
const internalsPayloads = log
  .filter((e) => e.kind === 'internals')
  .map((e) => e.payload as InternalsPayload);

describe('payload log replay', () => {
  it('reproduces the final board state exactly', () => {
    const { board } = replayLog(log);
    expect(board).not.toBeNull();
    const last = sessionPayloads[sessionPayloads.length - 1];
    expect(board!.status).toBe('finished');
    expect(board!.winner).toBe('alice');
    expect(board!.cells).toEqual(last.assignment);
    expect(board!.plies).toBe(last.history.length);
    // the board is a pure function of the latest payload (layout included,
    // since the layout itself is deterministic)
    const fresh = reduceSession(null, last);
    expect(board).toEqual(fresh);
  });

  it('is insensitive to replaying the log twice', () => {
    expect(replayLog(log)).toEqual(replayLog(log));
  });

  it('keeps vertex positions stable across payloads of one session', () => {
    let model = reduceSession(null, sessionPayloads[0]);
    const first = model.positions;
    for (const payload of sessionPayloads.slice(1)) {
      model = reduceSession(model, payload);
      expect(model.positions).toBe(first);
    }
  });

  it('tracks the last human and engine moves', () => {
    const { board } = replayLog(log);
    expect(board!.lastEngine?.player).toBe('alice');
    expect(board!.lastHuman?.player).toBe('bob');
  });
});

describe('internals model', () => {
  it('mirrors the service payload and expects C(k,2) games', () => {
    const { internals } = replayLog(log);
    expect(internals).not.toBeNull();
    expect(internals!.available).toBe(true);
    expect(internals!.expectedCount).toBe(3); // k = 3
    expect(internals!.boards).toHaveLength(3);
  });

  it('shows blue marks exactly when the human colored off-color', () => {
    const last = reduceInternals(internalsPayloads[internalsPayloads.length - 1]);
    const offColorMoves = sessionPayloads[sessionPayloads.length - 1].history.filter(
      (m) =>
        m.player === 'bob' &&
        m.shade !== null &&
        // per_color = 4 and base colors from the fixture's internals payload
        Math.floor(m.shade / 4) !==
          (internalsPayloads[0].base_colors ?? [])[m.vertex],
    );
    const blueMarked = new Set(last.boards.flatMap((b) => b.blue));
    expect(blueMarked).toEqual(new Set(offColorMoves.map((m) => m.vertex)));
  });

  it('reports unavailable internals as such', () => {
    const model = reduceInternals({ available: false, games: [] });
    expect(model.available).toBe(false);
    expect(model.expectedCount).toBeNull();
  });
});

describe('palette', () => {
  it('groups shades into k blocks with brightness steps', () => {
    const blocks = paletteBlocks(12, 3, 4);
    expect(blocks).toHaveLength(3);
    expect(blocks.flat()).toHaveLength(12);
    expect(blocks[1].map((p) => p.shade)).toEqual([4, 5, 6, 7]);
    expect(blocks[0][0].brightness).toBe(0);
    expect(blocks[0][3].brightness).toBe(1);
    const shades = new Set(blocks.flat().map((p) => p.shade));
    expect(shades.size).toBe(12);
  });

  it('falls back to one block when the split is unknown', () => {
    const blocks = paletteBlocks(5, undefined, undefined);
    expect(blocks).toHaveLength(1);
    expect(blocks[0]).toHaveLength(5);
  });
});

describe('layout', () => {
  it('is deterministic', () => {
    const edges: [number, number][] = [[0, 1], [1, 2], [2, 3], [0, 3], [0, 2]];
    expect(forceLayout(4, edges)).toEqual(forceLayout(4, edges));
  });

  it('places cycles on a circle', () => {
    const edges: [number, number][] = [[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]];
    const pts = layoutPositions({ n: 5, edges });
    const radii = pts.map((p) => Math.hypot(p.x, p.y));
    for (const r of radii) expect(r).toBeCloseTo(1, 6);
  });

  it('places the star center in the middle', () => {
    const edges: [number, number][] = [[0, 1], [0, 2], [0, 3]];
    const pts = layoutPositions({ n: 4, edges });
    expect(pts[0]).toEqual({ x: 0, y: 0 });
  });

  it('uses grid positions when product labels are present', () => {
    const labels: [number, number][] = [
      [0, 0], [0, 1], [1, 0], [1, 1],
    ];
    const pts = layoutPositions({
      n: 4,
      edges: [[0, 1], [2, 3], [0, 2], [1, 3]],
      labels,
    });
    expect(pts[0]).toEqual({ x: -1, y: -1 });
    expect(pts[3]).toEqual({ x: 1, y: 1 });
  });
});

describe('local pre-validation', () => {
  it('flags obviously illegal moves without claiming authority', () => {
    const { board } = replayLog(log.slice(0, 1));
    expect(board!.status).toBe('awaiting-human');
    const colored = board!.cells.findIndex((c) => c !== null);
    const open = board!.cells.findIndex((c) => c === null);
    expect(locallyLegal(board!, colored, 5)).toBe(false);
    expect(locallyLegal(board!, open, 99)).toBe(false);
    expect(locallyLegal(board!, open, 5)).toBe(true);
  });

  it('rejects every move once the game is finished', () => {
    const { board } = replayLog(log);
    expect(locallyLegal(board!, 0, 0)).toBe(false);
  });
});
