import { ApiClient, CareerKind } from "../api.js";
import { MessageKey } from "../catalog.js";
import { labeledField, translated } from "../i18n.js";
import { UsageRecorder } from "../usage.js";
import { accordionItem } from "../widgets/accordion.js";
import { errorBanner } from "../widgets/banner.js";

// One accordion panel per query kind; expanding a panel is the tracked
// "career panel opened" interaction. Each panel renders the parameter form
// its kind requires and a results table.

const LABELS: Record<string, MessageKey> = {
  occupation: "career.occupation",
  occupation_2: "career.occupation2",
  state: "career.state",
  scope: "career.scope",
  radius: "career.radius",
};

function occupationSelect(api: ApiClient, name: string): HTMLSelectElement {
  const select = document.createElement("select");
  select.name = name;
  void api.occupations().then((body) => {
    for (const occupation of body.occupations) {
      const option = document.createElement("option");
      option.value = occupation.code;
      option.textContent = occupation.name;
      select.append(option);
    }
  });
  return select;
}

function locationFields(form: HTMLElement): void {
  for (const [name, key] of [["city", "career.city"], ["state", "career.state"],
                             ["zip", "career.zip"], ["radius", "career.radius"]] as const) {
    const input = document.createElement("input");
    input.name = name;
    form.append(labeledField(key, input));
  }
}

function buildForm(api: ApiClient, kind: CareerKind): HTMLFormElement {
  const form = document.createElement("form");
  if (kind.params.includes("city|zip|state")) {
    locationFields(form);
  } else {
    for (const param of kind.params) {
      const key = LABELS[param] ?? "career.occupation";
      if (param === "occupation" || param === "occupation_2") {
        form.append(labeledField(key, occupationSelect(api, param)));
      } else {
        const input = document.createElement("input");
        input.name = param;
        form.append(labeledField(key, input));
      }
    }
  }
  return form;
}

function renderTable(table: { columns: string[]; rows: string[][] }): HTMLTableElement {
  const element = document.createElement("table");
  const head = document.createElement("tr");
  for (const column of table.columns) {
    const cell = document.createElement("th");
    cell.textContent = column;
    head.append(cell);
  }
  element.append(head);
  for (const row of table.rows) {
    const line = document.createElement("tr");
    for (const value of row) {
      const cell = document.createElement("td");
      cell.textContent = value;
      line.append(cell);
    }
    element.append(line);
  }
  return element;
}

export function renderCareersTab(api: ApiClient, usage: UsageRecorder): HTMLElement {
  const root = document.createElement("div");
  root.append(translated("h2", "career.heading"));

  void api.careerKinds().then((body) => {
    for (const kind of body.kinds) {
      const header = translated("span", `kind.${kind.slug}` as MessageKey);
      root.append(accordionItem({
        header,
        onExpand: () => usage.emit("career_panel_opened", kind.slug),
        render: (panel) => {
          const form = buildForm(api, kind);
          const run = translated("button", "career.run");
          run.type = "button";
          run.dataset.testid = `run-${kind.slug}`;
          const results = document.createElement("div");
          run.addEventListener("click", () => {
            const params: Record<string, string> = {};
            form.querySelectorAll<HTMLInputElement | HTMLSelectElement>("input, select")
              .forEach((field) => {
                if (field.value) {
                  params[field.name] = field.value;
                }
              });
            void api.careerQuery(kind.slug, params).then((table) => {
              results.replaceChildren(renderTable(table));
            }).catch((error) => {
              const banner = errorBanner(() => results.replaceChildren());
              if (error?.message) {
                banner.title = error.message;
              }
              results.replaceChildren(banner);
            });
          });
          panel.append(form, run, results);
        },
      }));
    }
  }).catch(() => {
    root.append(errorBanner(() => root.replaceWith(renderCareersTab(api, usage))));
  });
  return root;
}
