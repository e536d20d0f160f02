import init, { classifyFamily, herbrand, runScenario, scenarioNames } from "./pkg/oortscan_wasm.js";

function show(id, fn, summarize) {
  const summary = document.getElementById(`${id}-summary`);
  const out = document.getElementById(`${id}-out`);
  try {
    const value = JSON.parse(fn());
    out.textContent = JSON.stringify(value, null, 2);
    const [text, ok] = summarize(value);
    summary.textContent = text;
    summary.className = `summary ${ok ? "pass" : "fail"}`;
  } catch (err) {
    out.textContent = "";
    summary.textContent = `error: ${err}`;
    summary.className = "summary fail";
  }
}

function wire(id, handler) {
  const form = document.getElementById(id);
  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    handler(new FormData(form));
  });
}

const num = (data, key) => Number(data.get(key)) || 0;

function shapeName(shape) {
  if (typeof shape === "string") return shape;
  const [tag, arg] = Object.entries(shape)[0];
  return `${tag}(${[].concat(arg).join(",")})`;
}

await init();

const select = document.querySelector("#scenario select");
for (const name of scenarioNames()) {
  select.add(new Option(name, name));
}

wire("classify", (d) =>
  show("classify", () => classifyFamily(d.get("spec"), num(d, "p")), (v) => {
    const ok = v.oort_necessary.pass && v.local_oort_necessary.status !== "fail";
    return [`${v.group}: ${shapeName(v.shape)}, order ${v.order}, ${ok ? "passes" : "fails"} the necessary conditions`, ok];
  }));

wire("herbrand", (d) =>
  show("herbrand", () => herbrand(num(d, "p"), d.get("orders")), (v) => {
    const jumps = v.upper_jumps.map((j) => j.upper).join(", ") || "none";
    return [`${v.filtration}: upper jumps ${jumps}; Hasse-Arf ${v.hasse_arf ? "holds" : "fails"}`, v.hasse_arf];
  }));

wire("scenario", (d) =>
  show("scenario", () => runScenario(d.get("name"), num(d, "p"), num(d, "l"), num(d, "n")), (v) =>
    [`${v.name}: obstruction ${v.obstruction}`, v.obstruction]));
