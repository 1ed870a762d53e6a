// Page wiring: the new-game form, click-to-move loop, internals toggle.

import { ApiClient, ApiError } from './api';
import {
  BoardModel,
  InternalsModel,
  reduceInternals,
  reduceSession,
} from './model';
import { locallyLegal, renderBoard, renderInternals, renderPalette, renderStatus } from './ui';

const $ = (id: string) => document.getElementById(id) as HTMLElement;

let api: ApiClient;
let board: BoardModel | null = null;
let internals: InternalsModel | null = null;
let selectedShade: number | null = null;
let showInternals = false;

function redraw(): void {
  if (!board) return;
  renderBoard($('board'), board, { onVertexClick: handleVertexClick });
  renderPalette($('palette'), board, selectedShade, (shade) => {
    selectedShade = shade;
    redraw();
  });
  renderStatus($('status'), board);
  renderInternals($('internals'), internals, showInternals);
}

async function refreshInternals(): Promise<void> {
  if (!board || board.mode !== 'coloring' || !showInternals) return;
  try {
    internals = reduceInternals(await api.getInternals(board.sessionId));
  } catch {
    internals = null;
  }
}

async function handleVertexClick(vertex: number): Promise<void> {
  if (!board || board.status !== 'awaiting-human') return;
  const shade = board.mode === 'coloring' ? selectedShade : null;
  if (board.mode === 'coloring' && shade == null) {
    $('error').textContent = 'pick a shade first';
    return;
  }
  if (!locallyLegal(board, vertex, shade)) {
    $('error').textContent = 'that move looks illegal; the server decides';
  }
  try {
    const reply = await api.playMove(board.sessionId, vertex, shade);
    board = reduceSession(board, reply.state);
    $('error').textContent = '';
    await refreshInternals();
    redraw();
  } catch (err) {
    $('error').textContent =
      err instanceof ApiError ? `rejected (${err.status}): ${err.message}` : String(err);
  }
}

async function newGame(event: Event): Promise<void> {
  event.preventDefault();
  const form = event.target as HTMLFormElement;
  const data = new FormData(form);
  api = new ApiClient((data.get('server') as string) || 'http://127.0.0.1:8080');
  const mode = data.get('mode') as 'coloring' | 'marking' | 'bob-marking';
  try {
    const payload = await api.newGame({
      graph: data.get('graph') as string,
      mode,
      shades: mode === 'coloring' ? Number(data.get('shades')) : undefined,
      human: data.get('human') as 'alice' | 'bob',
      policy: data.get('policy') as string,
    });
    board = reduceSession(null, payload);
    internals = null;
    selectedShade = null;
    $('error').textContent = '';
    await refreshInternals();
    redraw();
  } catch (err) {
    $('error').textContent =
      err instanceof ApiError ? `server error: ${err.message}` : String(err);
  }
}

function init(): void {
  $('new-game-form').addEventListener('submit', newGame);
  $('toggle-internals').addEventListener('click', async () => {
    showInternals = !showInternals;
    await refreshInternals();
    redraw();
  });
}

document.addEventListener('DOMContentLoaded', init);
