import { ApiClient } from "../api.js";
import { MessageKey } from "../catalog.js";
import { translated } from "../i18n.js";
import { UsageRecorder } from "../usage.js";
import { accordionItem } from "../widgets/accordion.js";
import { errorBanner } from "../widgets/banner.js";

const CATEGORIES = [
  "Finding and Getting a Job",
  "Relationships",
  "Well-being",
  "Getting Adjusted to a New Place",
  "Community Resources",
  "FitBit",
];

export function renderFaqTab(api: ApiClient, usage: UsageRecorder): HTMLElement {
  const root = document.createElement("div");
  root.append(translated("h2", "faq.heading"));

  for (const category of CATEGORIES) {
    const section = document.createElement("section");
    section.dataset.category = category;
    section.append(translated("h3", `faqcat.${category}` as MessageKey));
    const list = document.createElement("div");
    section.append(list);
    root.append(section);

    void api.listFaq(category).then((body) => {
      for (const entry of body.entries) {
        const header = document.createElement("span");
        header.textContent = entry.question;
        list.append(accordionItem({
          header,
          render: (panel) => {
            const answer = document.createElement("p");
            answer.textContent = entry.answer;
            panel.append(answer);
          },
          onExpand: () => usage.emit("button_clicked", "faq-expand"),
        }));
      }
    }).catch(() => {
      list.append(errorBanner(() => {
        list.replaceChildren();
        root.replaceWith(renderFaqTab(api, usage));
      }));
    });
  }
  return root;
}
