import init, { count, insert_word, reassign } from "./pkg/taquin_web.js";

const $ = (id) => document.getElementById(id);

function grid(rows, opts = {}) {
  const width = opts.width ?? Math.max(0, ...rows.map((r) => r.length));
  const t = document.createElement("table");
  t.className = "grid";
  rows.forEach((row, i) => {
    const tr = t.insertRow();
    for (let j = 0; j < width; j++) {
      const td = tr.insertCell();
      if (j >= row.length) {
        td.className = "none";
      } else if (row[j] === null) {
        td.className = "idle";
      } else {
        td.textContent = row[j];
        if (opts.marked && opts.marked.has(`${i + 1},${j + 1}`)) td.className = "moved";
      }
    }
  });
  return t;
}

function show(el, ...nodes) {
  el.replaceChildren(...nodes);
}

function guard(f) {
  return () => {
    $("error").textContent = "";
    try {
      f();
    } catch (e) {
      $("error").textContent = e.message ?? String(e);
    }
  };
}

function runCount() {
  const v = JSON.parse(count($("shape").value));
  $("count-out").textContent = `${v.count} standard tableaux; hook lengths:`;
  show($("hooks"), grid(v.hooks));
}

let rskState = null;
function drawRsk() {
  const { steps, Q, k } = rskState;
  const p = k === 0 ? [] : steps[k - 1];
  const q = Q.map((r) => r.filter((x) => x <= k)).filter((r) => r.length);
  $("rsk-pos").textContent = `${k} / ${steps.length}`;
  const label = (s, n) => {
    const d = document.createElement("div");
    d.append(s, n);
    return d;
  };
  show($("rsk-p"), label("P", grid(p)));
  show($("rsk-q"), label("Q", grid(q)));
}
function runRsk() {
  const v = JSON.parse(insert_word($("word").value));
  rskState = { steps: v.steps, Q: v.Q, k: v.steps.length };
  drawRsk();
}
function stepRsk(d) {
  if (!rskState) return;
  rskState.k = Math.min(rskState.steps.length, Math.max(0, rskState.k + d));
  drawRsk();
}

let trace = null;
function drawTrace() {
  const { initial, events, k } = trace;
  const state = k === 0 ? initial : events[k - 1].state;
  const moves = k === 0 ? [] : events[k - 1].relocations;
  const marked = new Set(moves.map((m) => m.to.join(",")));
  $("hms-pos").textContent = `${k} / ${events.length}`;
  show($("hms-grid"), grid(state.cells, { marked }));
  if (k === 0) {
    $("hms-moves").textContent = "initial assignment";
  } else {
    const e = events[k - 1];
    const why = e.trigger.completed !== undefined
      ? `task ${e.trigger.completed} completed`
      : `idle cell (${e.trigger.rectify_corner.join(",")})`;
    const list = moves.map((m) => `${m.task}: (${m.from}) to (${m.to})`).join("; ");
    $("hms-moves").textContent = `${why}. ${list || "no relocation"}`;
  }
}
function runTrace() {
  const t = JSON.parse(reassign($("state").value, $("completions").value));
  trace = { ...t, k: 0 };
  drawTrace();
}
function stepTrace(d) {
  if (!trace) return;
  trace.k = Math.min(trace.events.length, Math.max(0, trace.k + d));
  drawTrace();
}

await init();
$("count-go").onclick = guard(runCount);
$("rsk-go").onclick = guard(runRsk);
$("rsk-prev").onclick = () => stepRsk(-1);
$("rsk-next").onclick = () => stepRsk(1);
$("hms-go").onclick = guard(runTrace);
$("hms-prev").onclick = () => stepTrace(-1);
$("hms-next").onclick = () => stepTrace(1);
$("load-normal").onclick = () => {
  $("state").value = '{"shape":[3,3,3],"cells":[[1,2,4],[3,5,7],[6,8,9]]}';
  $("completions").value = "1,3,2,5,8,4,6,7,9";
};
$("load-skew").onclick = () => {
  $("state").value = '{"shape":[4,4,4,4],"cells":[[null,null,1,6],[null,null,4,null],[2,3,5,null],[7,8,null,null]]}';
  $("completions").value = "";
};
guard(runCount)();
guard(runRsk)();
guard(runTrace)();
