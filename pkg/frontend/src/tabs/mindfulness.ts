import { ApiClient } from "../api.js";
import { MessageKey } from "../catalog.js";
import { translated } from "../i18n.js";
import { UsageRecorder } from "../usage.js";
import { accordionItem } from "../widgets/accordion.js";
import { errorBanner } from "../widgets/banner.js";

const SECTIONS = [
  "Meditation/Breathing Invitations and Exercises",
  "Wellness",
  "Breathing and Meditation",
  "Connecting with Nature",
  "Education",
];

export function renderMindfulnessTab(api: ApiClient, usage: UsageRecorder): HTMLElement {
  const root = document.createElement("div");
  root.append(translated("h2", "mind.heading"));

  for (const section of SECTIONS) {
    const header = translated("span", `mindsec.${section}` as MessageKey);
    root.append(accordionItem({
      header,
      render: async (panel) => {
        try {
          const body = await api.listMindfulness(section);
          for (const item of body.items) {
            const card = document.createElement("article");
            const title = document.createElement("h4");
            title.textContent = item.title;
            card.append(title);
            if (item.kind === "written-invitation") {
              const text = document.createElement("p");
              text.textContent = item.body ?? "";
              card.append(text);
            } else if (item.video_url) {
              const frame = document.createElement("iframe");
              frame.src = item.video_url;
              frame.dataset.video = item.id;
              frame.addEventListener("load", () => undefined);
              card.append(frame);
              usage.emit("link_accessed", "video-item");
            }
            panel.append(card);
          }
        } catch {
          panel.append(errorBanner(() => panel.replaceChildren()));
        }
      },
    }));
  }
  return root;
}
