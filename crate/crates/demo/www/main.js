import init, { indicators, blocks, verify_text, example_text } from "./pkg/hopflab_demo.js";

const $ = (id) => document.getElementById(id);

function params() {
  return [$("group").value, $("construction").value, Number($("p").value), Number($("k").value)];
}

function guard(target, f) {
  try {
    f();
  } catch (e) {
    $(target).innerHTML = "";
    const p = document.createElement("pre");
    p.className = "fail";
    p.textContent = String(e);
    $(target).append(p);
  }
}

function table(head, rows) {
  const t = document.createElement("table");
  const tr = t.insertRow();
  for (const h of head) {
    const th = document.createElement("th");
    th.textContent = h;
    tr.append(th);
  }
  for (const r of rows) {
    const row = t.insertRow();
    for (const c of r) row.insertCell().textContent = c;
  }
  return t;
}

function note(text) {
  const p = document.createElement("p");
  p.textContent = text;
  return p;
}

$("run-indicators").onclick = () => guard("indicators", () => {
  const r = JSON.parse(indicators(...params(), Number($("from").value), Number($("to").value)));
  const rows = r.rows.map((row, i) => [`V${i} (dim ${row.dim})`, ...row.values]);
  rows.push(["regular", ...r.regular]);
  $("indicators").replaceChildren(
    note(`dim ${r.dim} over ${r.field}`),
    table(["", ...r.n.map((n) => `n=${n}`)], rows),
  );
});

$("run-blocks").onclick = () => guard("blocks", () => {
  const r = JSON.parse(blocks(...params()));
  const rows = r.blocks.map((b, i) => [`V${i}`, b.dim, b.schur, b.character.join(" ")]);
  $("blocks").replaceChildren(
    note(`dim ${r.dim} over ${r.field}, epsilon(integral) = ${r.eps_of_integral}`),
    note(`u = (${r.u.join(", ")})`),
    table(["module", "dim", "Schur element", "character on basis"], rows),
  );
});

$("load-example").onclick = () => guard("verify", () => {
  $("text").value = example_text(...params());
});

$("run-verify").onclick = () => guard("verify", () => {
  const r = JSON.parse(verify_text($("text").value));
  const failed = r.checks.filter((c) => c.status === "fail");
  const summary = note(`dim ${r.dim} over ${r.field}: ${r.checks.length - failed.length}/${r.checks.length} checks passed`);
  summary.className = r.passed ? "pass" : "fail";
  const rows = r.checks.map((c) => [c.name, c.status, c.witness ?? ""]);
  $("verify").replaceChildren(summary, table(["check", "", "witness"], rows));
});

await init();
