// SVG board rendering.  All state lives in the models; this layer only
// draws the latest BoardModel / InternalsModel and forwards clicks.

import type { BoardModel, InternalsModel, PaletteShade } from './model';
import { locallyLegal } from './model';

const SVG_NS = 'http://www.w3.org/2000/svg';

export function shadeColor(p: PaletteShade, k: number): string {
  const hue = Math.round((360 * p.color) / Math.max(k, 1));
  const light = Math.round(72 - 40 * p.brightness);
  return `hsl(${hue}, 75%, ${light}%)`;
}

function markColor(cell: number | string | null, board: BoardModel): string {
  if (cell === null) return '#f4f4f4';
  if (board.mode !== 'coloring') {
    return cell === 'alice' ? '#e04b4b' : '#3b5bd8'; // red pen / blue pen
  }
  const k = board.palette.length;
  const per = board.palette[0]?.length ?? 1;
  const shade = cell as number;
  const block = Math.floor(shade / per);
  const idx = shade % per;
  return shadeColor(
    { shade, color: block, brightness: per === 1 ? 0.5 : idx / (per - 1) },
    k,
  );
}

export interface BoardCallbacks {
  onVertexClick: (vertex: number) => void;
}

export function renderBoard(
  root: HTMLElement,
  board: BoardModel,
  callbacks: BoardCallbacks,
): void {
  root.textContent = '';
  const svg = document.createElementNS(SVG_NS, 'svg');
  svg.setAttribute('viewBox', '-1.25 -1.25 2.5 2.5');
  svg.classList.add('board');
  for (const [u, v] of board.edges) {
    const line = document.createElementNS(SVG_NS, 'line');
    line.setAttribute('x1', String(board.positions[u].x));
    line.setAttribute('y1', String(board.positions[u].y));
    line.setAttribute('x2', String(board.positions[v].x));
    line.setAttribute('y2', String(board.positions[v].y));
    line.setAttribute('stroke', '#888');
    line.setAttribute('stroke-width', '0.02');
    svg.appendChild(line);
  }
  board.positions.forEach((p, v) => {
    const circle = document.createElementNS(SVG_NS, 'circle');
    circle.setAttribute('cx', String(p.x));
    circle.setAttribute('cy', String(p.y));
    circle.setAttribute('r', '0.11');
    circle.setAttribute('fill', markColor(board.cells[v], board));
    circle.setAttribute('stroke', '#333');
    circle.setAttribute('stroke-width', '0.015');
    const last =
      (board.lastEngine && board.lastEngine.vertex === v) ||
      (board.lastHuman && board.lastHuman.vertex === v);
    if (last) circle.setAttribute('stroke-width', '0.04');
    circle.classList.add('vertex');
    circle.dataset.vertex = String(v);
    circle.addEventListener('click', () => callbacks.onVertexClick(v));
    svg.appendChild(circle);
    const label = document.createElementNS(SVG_NS, 'text');
    label.setAttribute('x', String(p.x));
    label.setAttribute('y', String(p.y + 0.035));
    label.setAttribute('text-anchor', 'middle');
    label.setAttribute('font-size', '0.09');
    label.textContent = String(v);
    svg.appendChild(label);
  });
  root.appendChild(svg);
}

export function renderPalette(
  root: HTMLElement,
  board: BoardModel,
  selected: number | null,
  onSelect: (shade: number) => void,
): void {
  root.textContent = '';
  const k = board.palette.length;
  board.palette.forEach((block) => {
    const div = document.createElement('div');
    div.className = 'palette-block';
    block.forEach((p) => {
      const btn = document.createElement('button');
      btn.className = 'swatch' + (selected === p.shade ? ' selected' : '');
      btn.style.background = shadeColor(p, k);
      btn.title = `shade ${p.shade} (color ${p.color})`;
      btn.textContent = String(p.shade);
      btn.addEventListener('click', () => onSelect(p.shade));
      div.appendChild(btn);
    });
    root.appendChild(div);
  });
}

export function renderStatus(root: HTMLElement, board: BoardModel): void {
  if (board.status === 'finished') {
    if (board.mode === 'coloring') {
      root.textContent = `finished: ${board.winner} wins`;
      root.className = `banner ${board.winner === board.human ? 'win' : 'lose'}`;
    } else {
      root.textContent = `finished: play score ${board.score}`;
      root.className = 'banner';
    }
  } else {
    root.textContent =
      board.toMove === board.human ? 'your move' : 'engine thinking...';
    root.className = 'banner';
  }
}

export function renderInternals(
  root: HTMLElement,
  internals: InternalsModel | null,
  visible: boolean,
): void {
  root.textContent = '';
  root.style.display = visible ? 'block' : 'none';
  if (!visible || !internals) return;
  if (!internals.available) {
    root.textContent = 'internals are only tracked for the composed strategy';
    return;
  }
  const count = document.createElement('p');
  count.textContent = `${internals.boards.length} virtual marking games`;
  root.appendChild(count);
  for (const mini of internals.boards) {
    const box = document.createElement('div');
    box.className = 'mini-board';
    const title = document.createElement('h4');
    title.textContent = `colors (${mini.pair[0]}, ${mini.pair[1]})`;
    box.appendChild(title);
    const list = document.createElement('p');
    const mark = (v: number) =>
      mini.red.includes(v) ? `${v}:red` : mini.blue.includes(v) ? `${v}:blue` : `${v}`;
    list.textContent =
      mini.vertices.length === 0
        ? 'empty subgraph'
        : mini.vertices.map(mark).join('  ');
    box.appendChild(list);
    root.appendChild(box);
  }
}

export { locallyLegal };
